#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace lcdk {

// Fixed-width bit vector used for state sets and relation rows.
class Bits {
public:
  Bits() = default;
  explicit Bits(std::size_t n, bool value = false)
      : n_(n), words_((n + kWordBits - 1) / kWordBits, value ? ~std::uint64_t{0} : 0) {
    trim();
  }

  std::size_t size() const noexcept { return n_; }

  bool test(std::size_t i) const {
    assert(i < n_);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }

  void set(std::size_t i, bool value = true) {
    assert(i < n_);
    std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }

  Bits& operator&=(const Bits& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  Bits& operator|=(const Bits& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

  Bits complement() const {
    Bits r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool subset_of(const Bits& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const Bits& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool operator==(const Bits& o) const = default;

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

private:
  static constexpr std::size_t kWordBits = 64;

  void trim() {
    if (n_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (n_ % kWordBits)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Dense binary relation over state indices 0..n-1, stored as bit rows.
class Relation {
public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), rows_(n, Bits(n)) {}

  static Relation identity(std::size_t n);
  static Relation full(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  bool at(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  void set(std::size_t i, std::size_t j, bool value = true) { rows_[i].set(j, value); }

  const Bits& row(std::size_t i) const { return rows_[i]; }

  Relation operator&(const Relation& o) const;
  Relation operator|(const Relation& o) const;

  // Reflexive-transitive closure (Warshall over bit rows).
  Relation rtc() const;

  bool reflexive() const;
  bool symmetric() const;
  bool transitive() const;
  bool is_preorder() const { return reflexive() && transitive(); }
  bool is_equivalence() const { return is_preorder() && symmetric(); }

  bool subset_of(const Relation& o) const;
  bool operator==(const Relation& o) const = default;

  std::size_t pair_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  // {i : row(i) meets `targets`} and {i : row(i) within `targets`}.
  Bits diamond(const Bits& targets) const;
  Bits box(const Bits& targets) const;

private:
  std::size_t n_ = 0;
  std::vector<Bits> rows_;
};

inline Relation rtc(const Relation& r) { return r.rtc(); }

}  // namespace lcdk
