#include "lcdk/term.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <unordered_map>

#include "lcdk/errors.hpp"

namespace lcdk {

Term Term::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::meet(Term left, Term right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Meet;
  n->left = std::move(left.node_);
  n->right = std::move(right.node_);
  return Term(std::move(n));
}

Term Term::join(Term left, Term right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Join;
  n->left = std::move(left.node_);
  n->right = std::move(right.node_);
  return Term(std::move(n));
}

const std::string& Term::atom_name() const {
  assert(node_->kind == Kind::Atom);
  return node_->name;
}

Term Term::left() const {
  assert(node_->kind != Kind::Atom);
  return Term(node_->left);
}

Term Term::right() const {
  assert(node_->kind != Kind::Atom);
  return Term(node_->right);
}

bool Term::node_eq(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Kind::Atom) return a.name == b.name;
  return node_eq(*a.left, *b.left) && node_eq(*a.right, *b.right);
}

bool Term::operator==(const Term& o) const {
  if (node_ == o.node_) return true;
  return node_eq(*node_, *o.node_);
}

std::size_t Term::node_count() const {
  if (is_atom()) return 1;
  return 1 + left().node_count() + right().node_count();
}

namespace {

// Precedence for printing: join < meet < atom. The grammar folds chains
// of the same operator to the left, so a right child at the same level
// needs parentheses.
enum { kPrecJoin = 1, kPrecMeet = 2, kPrecAtom = 3 };

int term_prec(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Join: return kPrecJoin;
    case Term::Kind::Meet: return kPrecMeet;
    case Term::Kind::Atom: return kPrecAtom;
  }
  return kPrecAtom;
}

void render_term(const Term& t, int min_prec, std::string& out) {
  int prec = term_prec(t);
  bool wrap = prec < min_prec;
  if (wrap) out += '(';
  switch (t.kind()) {
    case Term::Kind::Atom:
      out += t.atom_name();
      break;
    case Term::Kind::Meet:
      render_term(t.left(), kPrecMeet, out);
      out += '*';
      render_term(t.right(), kPrecMeet + 1, out);
      break;
    case Term::Kind::Join:
      render_term(t.left(), kPrecJoin, out);
      out += '+';
      render_term(t.right(), kPrecJoin + 1, out);
      break;
  }
  if (wrap) out += ')';
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  render_term(t, kPrecJoin, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_string(t); }

std::set<std::string> atoms_of(const Term& t) {
  std::set<std::string> out;
  auto walk = [&out](auto&& self, const Term& u) -> void {
    if (u.is_atom()) {
      out.insert(u.atom_name());
    } else {
      self(self, u.left());
      self(self, u.right());
    }
  };
  walk(walk, t);
  return out;
}

Term map_atoms(const Term& t, const std::map<std::string, Term>& h) {
  switch (t.kind()) {
    case Term::Kind::Atom: {
      auto it = h.find(t.atom_name());
      return it == h.end() ? t : it->second;
    }
    case Term::Kind::Meet:
      return Term::meet(map_atoms(t.left(), h), map_atoms(t.right(), h));
    case Term::Kind::Join:
      return Term::join(map_atoms(t.left(), h), map_atoms(t.right(), h));
  }
  return t;
}

bool FlatTerm::operator==(const FlatTerm& o) const {
  return kind == o.kind && atom == o.atom && children == o.children;
}

bool FlatTerm::operator<(const FlatTerm& o) const {
  if (kind != o.kind) return kind < o.kind;
  if (kind == Term::Kind::Atom) return atom < o.atom;
  return children < o.children;
}

std::string FlatTerm::key() const {
  if (kind == Term::Kind::Atom) return atom;
  std::string out = "(";
  char op = kind == Term::Kind::Meet ? '*' : '+';
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) out += op;
    out += children[i].key();
  }
  out += ')';
  return out;
}

Term FlatTerm::to_term() const {
  if (kind == Term::Kind::Atom) return Term::atom(atom);
  Term acc = children.front().to_term();
  for (std::size_t i = 1; i < children.size(); ++i) {
    Term next = children[i].to_term();
    acc = kind == Term::Kind::Meet ? Term::meet(acc, next) : Term::join(acc, next);
  }
  return acc;
}

FlatTerm flatten(const Term& t) {
  if (t.is_atom()) return FlatTerm{Term::Kind::Atom, t.atom_name(), {}};

  Term::Kind k = t.kind();
  std::vector<FlatTerm> kids;
  auto absorb = [&kids, k](const FlatTerm& f) {
    if (f.kind == k)
      kids.insert(kids.end(), f.children.begin(), f.children.end());
    else
      kids.push_back(f);
  };
  absorb(flatten(t.left()));
  absorb(flatten(t.right()));
  std::sort(kids.begin(), kids.end());
  kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
  if (kids.size() == 1) return kids.front();
  return FlatTerm{k, {}, std::move(kids)};
}

namespace {

struct LeqMemo {
  std::unordered_map<std::string, bool> done;
  std::size_t limit;
};

// Whitman's condition on flattened terms. Join on the left and meet on
// the right split conjunctively; the remaining shapes split
// disjunctively, with the meet-vs-join case trying all four ways.
bool whitman(const FlatTerm& s, const FlatTerm& t, LeqMemo& memo) {
  std::string key = s.key();
  key += '\x01';
  key += t.key();
  if (auto it = memo.done.find(key); it != memo.done.end()) return it->second;
  if (memo.done.size() >= memo.limit)
    throw ResourceError("term_leq memo limit exceeded (" + std::to_string(memo.limit) + " entries)");

  bool result;
  if (s.kind == Term::Kind::Join) {
    result = true;
    for (const auto& c : s.children)
      if (!whitman(c, t, memo)) {
        result = false;
        break;
      }
  } else if (t.kind == Term::Kind::Meet) {
    result = true;
    for (const auto& c : t.children)
      if (!whitman(s, c, memo)) {
        result = false;
        break;
      }
  } else if (s.kind == Term::Kind::Atom && t.kind == Term::Kind::Atom) {
    result = s.atom == t.atom;
  } else if (s.kind == Term::Kind::Atom) {
    // atom <= join
    result = false;
    for (const auto& c : t.children)
      if (whitman(s, c, memo)) {
        result = true;
        break;
      }
  } else if (t.kind == Term::Kind::Atom) {
    // meet <= atom
    result = false;
    for (const auto& c : s.children)
      if (whitman(c, t, memo)) {
        result = true;
        break;
      }
  } else {
    // meet <= join
    result = false;
    for (const auto& c : s.children)
      if (whitman(c, t, memo)) {
        result = true;
        break;
      }
    if (!result)
      for (const auto& c : t.children)
        if (whitman(s, c, memo)) {
          result = true;
          break;
        }
  }

  memo.done.emplace(std::move(key), result);
  return result;
}

}  // namespace

bool term_leq(const Term& s, const Term& t, const LeqOptions& opts) {
  LeqMemo memo{{}, opts.memo_limit};
  return whitman(flatten(s), flatten(t), memo);
}

bool term_equiv(const Term& s, const Term& t, const LeqOptions& opts) {
  FlatTerm fs = flatten(s);
  FlatTerm ft = flatten(t);
  if (fs == ft) return true;
  LeqMemo memo{{}, opts.memo_limit};
  return whitman(fs, ft, memo) && whitman(ft, fs, memo);
}

}  // namespace lcdk
