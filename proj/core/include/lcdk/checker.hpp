#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lcdk/formula.hpp"
#include "lcdk/model.hpp"
#include "lcdk/relation.hpp"
#include "lcdk/term.hpp"

namespace lcdk {

struct EvalOptions {
  // Unknown propositions are an error by default; lenient mode treats
  // them as everywhere-false.
  bool strict_propositions = true;
};

// Extension of f in m, computed bottom-up over full state sets. Dynamic
// operators evaluate by delegation: [!b] evaluates the body in the
// updated model, [E.e] in the product model projected at e.
Bits eval(const Model& m, const Formula& f, const EvalOptions& opts = {});

bool check(const Model& m, const std::string& state, const Formula& f,
           const EvalOptions& opts = {});

bool valid_on_model(const Model& m, const Formula& f, const EvalOptions& opts = {});

// All partitions of {0..n-1} as block-index vectors (restricted growth
// strings); 15 for n=4, 52 for n=5.
std::vector<std::vector<int>> set_partitions(int n);

Relation partition_relation(const std::vector<int>& blocks);

// "{{w1,w2},{w3}}" style rendering, 1-based elements.
std::string describe_partition(const std::vector<int>& blocks);

struct OracleOptions {
  int max_states = 5;  // cost guard; 52^atoms assignments at 5 states
};

struct OracleResult {
  bool holds = false;
  // Countermodel when !holds: atom -> partition of {0..n-1}.
  std::map<std::string, std::vector<int>> counterexample;
};

// Brute-force semantic order: s <= t holds iff R_s is contained in R_t
// under every assignment of partitions of an n_states-element set to the
// atoms of s and t.
OracleResult semantic_term_leq_check(const Term& s, const Term& t, int n_states,
                                     const OracleOptions& opts = {});

bool semantic_term_leq(const Term& s, const Term& t, int n_states,
                       const OracleOptions& opts = {});

struct AxiomFailure {
  std::string schema;
  std::string instance;
  std::string model_json;
  std::string state;
};

struct AxiomReport {
  Model::Mode mode = Model::Mode::S5;
  int models = 0;
  int instances_per_schema = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, int>> checks_per_schema;
  std::vector<AxiomFailure> failures;
  bool ok() const noexcept { return failures.empty(); }
};

// Instantiates every axiom schema of the proof system (K, T, 4, 5 in S5
// mode, dual, the lattice laws, FP and INDUC) with random formulas over
// {p,q} and random terms, and checks validity on random models of the
// requested mode. Deterministic in the seed.
AxiomReport axiom_suite(Model::Mode mode, int n_models, std::uint64_t seed,
                        int instances_per_schema = 20, std::size_t max_states = 6);

std::string format_report(const AxiomReport& report);

}  // namespace lcdk
