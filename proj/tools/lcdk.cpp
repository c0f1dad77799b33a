// lcdk — model checking and dynamic-update tool for epistemic logic with
// lattice-term group knowledge operators.
//
// Exit codes: 0 = success / positive verdict, 1 = negative verdict or
// failing report, 2 = usage, I/O, parse or validation error.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcdk/checker.hpp"
#include "lcdk/closure.hpp"
#include "lcdk/errors.hpp"
#include "lcdk/events.hpp"
#include "lcdk/io.hpp"
#include "lcdk/parser.hpp"
#include "lcdk/semipublic.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

lcdk::Model load_valid_model(const std::string& path) {
  lcdk::Model m = lcdk::load_model_file(path);
  auto report = lcdk::validate_model(m);
  if (!report.ok()) {
    std::string msg = path + ": invalid model";
    for (const auto& issue : report.issues) msg += "\n  " + issue;
    throw lcdk::Error(msg);
  }
  return m;
}

void emit_model(const lcdk::Model& m, const std::string& out_path) {
  if (out_path.empty())
    std::cout << lcdk::model_to_json_string(m) << "\n";
  else
    lcdk::save_model_file(m, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"model checker for iterated common and distributed knowledge"};
  app.require_subcommand(1);

  std::string model_path, state, formula_text, map_path, event_path, out_path;
  std::string term1, term2;
  std::vector<std::string> env_paths;
  bool extension = false, lenient = false, neg_closure = false, atoms = false;
  std::string mode_name = "s5";
  int n_models = 200, instances = 20, states_bound = 4, max_states = 5;
  std::uint64_t seed = 20240601;

  auto* cmd_check = app.add_subcommand("check", "evaluate a formula at a state of a model");
  cmd_check->add_option("model", model_path, "model JSON file")->required();
  cmd_check->add_option("state", state, "state name")->required();
  cmd_check->add_option("formula", formula_text, "formula text")->required();
  cmd_check->add_option("--env", env_paths, "reading-map / event-model JSON files");
  cmd_check->add_flag("--extension", extension, "also print the formula's extension");
  cmd_check->add_flag("--lenient-props", lenient, "treat unknown propositions as false");

  auto* cmd_leq = app.add_subcommand("leq", "decide the term order s <= t");
  cmd_leq->add_option("term1", term1, "left term")->required();
  cmd_leq->add_option("term2", term2, "right term")->required();

  auto* cmd_translate =
      app.add_subcommand("translate", "rewrite dynamic operators away ([!b], [E.e])");
  cmd_translate->add_option("formula", formula_text, "formula text")->required();
  cmd_translate->add_option("--env", env_paths, "reading-map / event-model JSON files");

  auto* cmd_update = app.add_subcommand("update", "apply a semi-public reading map to a model");
  cmd_update->add_option("model", model_path, "model JSON file")->required();
  cmd_update->add_option("map", map_path, "reading-map JSON file")->required();
  cmd_update->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* cmd_product = app.add_subcommand("product", "product update with a reading event model");
  cmd_product->add_option("model", model_path, "model JSON file")->required();
  cmd_product->add_option("event-model", event_path, "event-model JSON file")->required();
  cmd_product->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* cmd_axioms = app.add_subcommand("axioms", "validity suite for the axiom schemas");
  cmd_axioms->add_option("--mode", mode_name, "s5 or s4")->check(CLI::IsMember({"s5", "s4"}));
  cmd_axioms->add_option("--models", n_models, "number of random models");
  cmd_axioms->add_option("--seed", seed, "random seed");
  cmd_axioms->add_option("--instances", instances, "instances per schema per model");

  auto* cmd_fl = app.add_subcommand("fl", "closure of a formula");
  cmd_fl->add_option("formula", formula_text, "formula text")->required();
  cmd_fl->add_option("--env", env_paths, "definitions (for parsing only)");
  cmd_fl->add_flag("--neg", neg_closure, "close under single negations too");
  cmd_fl->add_flag("--atoms", atoms, "print pseudo-atoms of the closure");

  auto* cmd_oracle = app.add_subcommand("oracle-leq", "brute-force semantic term order");
  cmd_oracle->add_option("term1", term1, "left term")->required();
  cmd_oracle->add_option("term2", term2, "right term")->required();
  cmd_oracle->add_option("--states", states_bound, "base-set size (default 4)");
  cmd_oracle->add_option("--max-states", max_states, "cost guard (default 5)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_check->parsed()) {
      lcdk::Model m = load_valid_model(model_path);
      lcdk::Environment env = lcdk::load_environment(env_paths);
      lcdk::Formula f = lcdk::parse_formula(formula_text, env);
      lcdk::EvalOptions opts{!lenient};
      lcdk::Bits ext = lcdk::eval(m, f, opts);
      auto idx = m.state_index(state);
      if (!idx) throw lcdk::EvalError("unknown state '" + state + "'");
      bool verdict = ext.test(*idx);
      std::cout << (verdict ? "true" : "false") << "\n";
      if (extension) {
        std::vector<std::string> names;
        for (std::size_t i : ext.members()) names.push_back(m.states[i]);
        std::sort(names.begin(), names.end());
        std::cout << "extension:";
        for (const auto& n : names) std::cout << " " << n;
        std::cout << "\n";
      }
      return verdict ? kExitTrue : kExitFalse;
    }

    if (cmd_leq->parsed()) {
      bool verdict = lcdk::term_leq(lcdk::parse_term(term1), lcdk::parse_term(term2));
      std::cout << (verdict ? "true" : "false") << "\n";
      return verdict ? kExitTrue : kExitFalse;
    }

    if (cmd_translate->parsed()) {
      lcdk::Environment env = lcdk::load_environment(env_paths);
      lcdk::Formula f = lcdk::parse_formula(formula_text, env);
      lcdk::Formula reduced = lcdk::reduce_event(f);
      std::cout << lcdk::to_string(reduced) << "\n";
      return kExitTrue;
    }

    if (cmd_update->parsed()) {
      lcdk::Model m = load_valid_model(model_path);
      lcdk::ReadingMap beta = lcdk::load_reading_map_file(map_path);
      for (const auto& warning : lcdk::lint_reading_map(beta))
        std::cerr << "warning: " << warning << "\n";
      emit_model(lcdk::update_model(m, beta), out_path);
      return kExitTrue;
    }

    if (cmd_product->parsed()) {
      lcdk::Model m = load_valid_model(model_path);
      lcdk::EventModel em = lcdk::load_event_model_file(event_path);
      auto report = lcdk::validate_event_model(em);
      if (!report.ok()) {
        std::string msg = event_path + ": invalid event model";
        for (const auto& issue : report.issues) msg += "\n  " + issue;
        throw lcdk::Error(msg);
      }
      lcdk::Model product = lcdk::product_update(m, em);
      std::cerr << "detected mode: " << lcdk::to_string(lcdk::detect_mode(product)) << "\n";
      emit_model(product, out_path);
      return kExitTrue;
    }

    if (cmd_axioms->parsed()) {
      auto mode = mode_name == "s5" ? lcdk::Model::Mode::S5 : lcdk::Model::Mode::S4;
      lcdk::AxiomReport report = lcdk::axiom_suite(mode, n_models, seed, instances);
      std::cout << lcdk::format_report(report) << "\n";
      return report.ok() ? kExitTrue : kExitFalse;
    }

    if (cmd_fl->parsed()) {
      lcdk::Environment env = lcdk::load_environment(env_paths);
      lcdk::Formula f = lcdk::parse_formula(formula_text, env);
      if (atoms) {
        for (const auto& atom : lcdk::pseudo_atoms({f})) {
          std::cout << "{";
          for (std::size_t i = 0; i < atom.size(); ++i)
            std::cout << (i ? ", " : "") << lcdk::to_string(atom[i]);
          std::cout << "}\n";
        }
      } else {
        auto closure = neg_closure ? lcdk::neg_fl_closure({f}) : lcdk::fl_closure({f});
        for (const auto& g : closure) std::cout << lcdk::to_string(g) << "\n";
      }
      return kExitTrue;
    }

    if (cmd_oracle->parsed()) {
      lcdk::OracleOptions opts{max_states};
      auto result = lcdk::semantic_term_leq_check(lcdk::parse_term(term1),
                                                  lcdk::parse_term(term2), states_bound, opts);
      std::cout << (result.holds ? "true" : "false") << "\n";
      if (!result.holds) {
        std::cout << "countermodel partitions over " << states_bound << " states:\n";
        for (const auto& [atom, blocks] : result.counterexample)
          std::cout << "  " << atom << " = " << lcdk::describe_partition(blocks) << "\n";
      }
      return result.holds ? kExitTrue : kExitFalse;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
