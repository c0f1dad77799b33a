#include "lcdk/relation.hpp"

namespace lcdk {

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

Relation Relation::full(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) r.rows_[i] = Bits(n, true);
  return r;
}

Relation Relation::operator&(const Relation& o) const {
  assert(n_ == o.n_);
  Relation r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.rows_[i] = rows_[i] & o.rows_[i];
  return r;
}

Relation Relation::operator|(const Relation& o) const {
  assert(n_ == o.n_);
  Relation r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.rows_[i] = rows_[i] | o.rows_[i];
  return r;
}

Relation Relation::rtc() const {
  Relation r = *this;
  for (std::size_t i = 0; i < n_; ++i) r.rows_[i].set(i);
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t i = 0; i < n_; ++i)
      if (r.rows_[i].test(k)) r.rows_[i] |= r.rows_[k];
  return r;
}

bool Relation::reflexive() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (!at(i, i)) return false;
  return true;
}

bool Relation::symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool Relation::transitive() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k)
      if (at(i, k) && !rows_[k].subset_of(rows_[i])) return false;
  return true;
}

bool Relation::subset_of(const Relation& o) const {
  assert(n_ == o.n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (!rows_[i].subset_of(o.rows_[i])) return false;
  return true;
}

std::size_t Relation::pair_count() const {
  std::size_t c = 0;
  for (const auto& row : rows_) c += row.count();
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (at(i, j)) out.emplace_back(i, j);
  return out;
}

Bits Relation::diamond(const Bits& targets) const {
  Bits out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (rows_[i].intersects(targets)) out.set(i);
  return out;
}

Bits Relation::box(const Bits& targets) const {
  Bits out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (rows_[i].subset_of(targets)) out.set(i);
  return out;
}

}  // namespace lcdk
