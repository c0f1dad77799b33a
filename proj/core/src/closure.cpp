#include "lcdk/closure.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <string>

#include "lcdk/errors.hpp"
#include "lcdk/term.hpp"

namespace lcdk {

namespace {

// Printed form is injective up to structural equality (round-trip
// property), so it doubles as the set key and the canonical order.
using FormulaSet = std::map<std::string, Formula>;

std::vector<Formula> to_sorted_vector(const FormulaSet& set) {
  std::vector<Formula> out;
  out.reserve(set.size());
  for (const auto& [key, f] : set) out.push_back(f);
  return out;
}

void close_fl(FormulaSet& set) {
  std::deque<Formula> work;
  for (const auto& [key, f] : set) work.push_back(f);

  auto add = [&set, &work](const Formula& f) {
    if (set.emplace(to_string(f), f).second) work.push_back(f);
  };

  while (!work.empty()) {
    Formula f = work.front();
    work.pop_front();
    switch (f.kind()) {
      case Formula::Kind::Prop:
        break;
      case Formula::Kind::Neg:
        add(f.child());
        break;
      case Formula::Kind::Or:
        add(f.lhs());
        add(f.rhs());
        break;
      case Formula::Kind::Box:
        add(f.child());
        break;
      case Formula::Kind::Diamond: {
        add(f.child());
        const Term& t = f.term();
        if (t.kind() == Term::Kind::Meet) {
          add(Formula::conj(Formula::diamond(t.left(), f.child()),
                            Formula::diamond(t.right(), f.child())));
        } else if (t.kind() == Term::Kind::Join) {
          add(Formula::diamond(t.left(), f));
          add(Formula::diamond(t.right(), f));
        }
        break;
      }
      case Formula::Kind::Bang:
      case Formula::Kind::Event:
        throw Error("closure is defined for static formulas only");
    }
  }
}

}  // namespace

std::vector<Formula> fl_closure(const std::vector<Formula>& seeds) {
  FormulaSet set;
  for (const auto& f : seeds) set.emplace(to_string(f), f);
  close_fl(set);
  return to_sorted_vector(set);
}

Formula single_negation(const Formula& f) {
  if (f.kind() == Formula::Kind::Neg) return f.child();
  return Formula::neg(f);
}

std::vector<Formula> neg_fl_closure(const std::vector<Formula>& seeds) {
  FormulaSet set;
  for (const auto& f : seeds) set.emplace(to_string(f), f);
  // Interleave both closures to a joint fixpoint.
  std::size_t before = 0;
  do {
    before = set.size();
    close_fl(set);
    FormulaSet negs;
    for (const auto& [key, f] : set) {
      Formula n = single_negation(f);
      negs.emplace(to_string(n), n);
    }
    set.insert(negs.begin(), negs.end());
  } while (set.size() != before);
  return to_sorted_vector(set);
}

std::vector<std::vector<Formula>> pseudo_atoms(const std::vector<Formula>& seeds,
                                               const ClosureOptions& opts) {
  const std::vector<Formula> closure = neg_fl_closure(seeds);
  const std::size_t n = closure.size();

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(to_string(closure[i]), i);
  auto must_find = [&index](const Formula& f) {
    auto it = index.find(to_string(f));
    if (it == index.end()) throw Error("formula missing from its own closure: " + to_string(f));
    return it->second;
  };

  // "Exactly one of f and ~f" constraints form edges i -- partner[i].
  // Chains like p, ~p, ~~p share members, so the edges make negation
  // chains whose only valid pictures are the two alternating ones per
  // connected component.
  std::vector<std::size_t> partner(n);
  for (std::size_t i = 0; i < n; ++i) partner[i] = must_find(single_negation(closure[i]));

  std::vector<std::vector<std::size_t>> adjacent(n);
  for (std::size_t i = 0; i < n; ++i) {
    adjacent[i].push_back(partner[i]);
    adjacent[partner[i]].push_back(i);
  }

  // Bipartition each component by BFS parity.
  std::vector<int> component(n, -1);
  std::vector<int> parity(n, 0);
  std::size_t n_components = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (component[start] != -1) continue;
    int id = static_cast<int>(n_components++);
    std::deque<std::size_t> queue{start};
    component[start] = id;
    parity[start] = 0;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adjacent[u]) {
        if (component[v] == -1) {
          component[v] = id;
          parity[v] = 1 - parity[u];
          queue.push_back(v);
        } else if (parity[v] == parity[u]) {
          throw Error("inconsistent negation structure in closure");
        }
      }
    }
  }

  if (n_components >= 64 || (std::size_t{1} << n_components) > opts.candidate_cap)
    throw ResourceError("pseudo-atom candidate budget exceeded (2^" +
                        std::to_string(n_components) + " candidates)");

  // Local conditions, precomputed as index tuples.
  struct OrCond { std::size_t self, l, r; };
  struct MonoCond { std::size_t from, to; };            // <s>f in A implies <t>f in A
  struct JoinCond { std::size_t self, body, l, r; };    // join unfolding
  std::vector<OrCond> ors;
  std::vector<MonoCond> monos;
  std::vector<JoinCond> joins;

  for (std::size_t i = 0; i < n; ++i) {
    const Formula& f = closure[i];
    if (f.kind() == Formula::Kind::Or) {
      ors.push_back({i, must_find(f.lhs()), must_find(f.rhs())});
    } else if (f.kind() == Formula::Kind::Diamond) {
      if (f.term().kind() == Term::Kind::Join) {
        const Term& t = f.term();
        joins.push_back({i, must_find(f.child()), must_find(Formula::diamond(t.left(), f)),
                         must_find(Formula::diamond(t.right(), f))});
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || closure[j].kind() != Formula::Kind::Diamond) continue;
        if (!(closure[i].child() == closure[j].child())) continue;
        if (term_leq(closure[i].term(), closure[j].term())) monos.push_back({i, j});
      }
    }
  }

  std::vector<bool> in(n, false);
  std::vector<std::vector<Formula>> atoms;

  auto conditions_hold = [&]() {
    for (const auto& c : ors)
      if (in[c.self] != (in[c.l] || in[c.r])) return false;
    for (const auto& c : monos)
      if (in[c.from] && !in[c.to]) return false;
    for (const auto& c : joins)
      if (in[c.self] != (in[c.body] || in[c.l] || in[c.r])) return false;
    return true;
  };

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_components); ++mask) {
    for (std::size_t i = 0; i < n; ++i)
      in[i] = parity[i] == static_cast<int>((mask >> component[i]) & 1);
    if (!conditions_hold()) continue;
    std::vector<Formula> atom;
    for (std::size_t i = 0; i < n; ++i)
      if (in[i]) atom.push_back(closure[i]);
    atoms.push_back(std::move(atom));
  }
  return atoms;
}

}  // namespace lcdk
