#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace lcdk {

// Lattice term over a finite set of atomic terms: meet (`*`) builds
// pooled (distributed) knowledge, join (`+`) builds closure (common)
// knowledge. Immutable tree with cheap copies; structural equality only —
// semantic comparison goes through term_leq / term_equiv.
class Term {
public:
  enum class Kind { Atom, Meet, Join };

  static Term atom(std::string name);
  static Term meet(Term left, Term right);
  static Term join(Term left, Term right);

  Kind kind() const noexcept { return node_->kind; }
  bool is_atom() const noexcept { return node_->kind == Kind::Atom; }

  const std::string& atom_name() const;
  Term left() const;
  Term right() const;

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }

  std::size_t node_count() const;

private:
  struct Node {
    Kind kind;
    std::string name;                   // Atom
    std::shared_ptr<const Node> left;   // Meet/Join
    std::shared_ptr<const Node> right;
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static bool node_eq(const Node& a, const Node& b);

  std::shared_ptr<const Node> node_;
};

// Concrete syntax with minimal parentheses; `*` binds tighter than `+`.
std::string to_string(const Term& t);
std::ostream& operator<<(std::ostream& os, const Term& t);

// Sorted set of atomic-term names occurring in t.
std::set<std::string> atoms_of(const Term& t);

// Replaces each leaf x by h(x), keeping the meet/join structure. Atoms
// missing from h map to themselves, so a partial h acts as an identity
// default. This is the homomorphic extension of h.
Term map_atoms(const Term& t, const std::map<std::string, Term>& h);

// Associativity/commutativity/idempotency normal form: n-ary meet and
// join nodes with sorted, duplicate-free children and no nested node of
// the same kind. flatten is idempotent, and equal flat forms imply
// term_equiv.
struct FlatTerm {
  Term::Kind kind = Term::Kind::Atom;
  std::string atom;
  std::vector<FlatTerm> children;  // Meet/Join: size >= 2, sorted, unique

  bool operator==(const FlatTerm& o) const;
  bool operator<(const FlatTerm& o) const;

  // Canonical printable key, also used for memoization.
  std::string key() const;

  // Left-fold back into a binary Term.
  Term to_term() const;
};

FlatTerm flatten(const Term& t);

struct LeqOptions {
  // Recursion guard: maximum number of memoized subproblems before the
  // decision aborts with ResourceError.
  std::size_t memo_limit = 1'000'000;
};

// Decides s <= t in the free lattice over the atomic terms, by Whitman's
// recursive condition on the flattened forms.
bool term_leq(const Term& s, const Term& t, const LeqOptions& opts = {});

// s <= t and t <= s.
bool term_equiv(const Term& s, const Term& t, const LeqOptions& opts = {});

}  // namespace lcdk
