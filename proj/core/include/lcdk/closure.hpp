#pragma once

#include <cstddef>
#include <vector>

#include "lcdk/formula.hpp"

namespace lcdk {

// Closure machinery over static formulas. Sets are represented as
// duplicate-free vectors in a canonical (printed) order.

// Least superset closed under subformulas plus the two unfolding rules:
// <s*t>f adds <s>f & <t>f, and <s+t>f adds <s><s+t>f and <t><s+t>f.
// Always finite; throws on dynamic operators.
std::vector<Formula> fl_closure(const std::vector<Formula>& seeds);

// Strips one leading negation, or prefixes one.
Formula single_negation(const Formula& f);

// fl_closure, then closed under single negations.
std::vector<Formula> neg_fl_closure(const std::vector<Formula>& seeds);

struct ClosureOptions {
  // Candidate budget for pseudo-atom enumeration (2^pairs candidates).
  std::size_t candidate_cap = std::size_t{1} << 20;
};

// Maximal subsets of the closure that pick exactly one of each
// formula/negation pair and satisfy the local disjunction, term-order
// monotonicity and join-unfolding conditions. A syntactic
// over-approximation of the derivability-consistent atoms: every
// semantically realizable state description appears, some unsatisfiable
// ones may too.
std::vector<std::vector<Formula>> pseudo_atoms(const std::vector<Formula>& seeds,
                                               const ClosureOptions& opts = {});

}  // namespace lcdk
