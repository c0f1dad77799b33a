#include "lcdk/checker.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "lcdk/errors.hpp"
#include "lcdk/events.hpp"
#include "lcdk/gen.hpp"
#include "lcdk/io.hpp"
#include "lcdk/semipublic.hpp"

namespace lcdk {

namespace {

Bits eval_node(const Model& m, const Formula& f, const EvalOptions& opts,
               RelationCache& cache) {
  switch (f.kind()) {
    case Formula::Kind::Prop: {
      auto it = m.valuation.find(f.prop_name());
      if (it == m.valuation.end()) {
        if (opts.strict_propositions)
          throw EvalError("unknown proposition '" + f.prop_name() + "'");
        return Bits(m.size());
      }
      return it->second;
    }
    case Formula::Kind::Neg:
      return eval_node(m, f.child(), opts, cache).complement();
    case Formula::Kind::Or:
      return eval_node(m, f.lhs(), opts, cache) | eval_node(m, f.rhs(), opts, cache);
    case Formula::Kind::Diamond:
      return relation_of(m, f.term(), &cache).diamond(eval_node(m, f.child(), opts, cache));
    case Formula::Kind::Box:
      return relation_of(m, f.term(), &cache).box(eval_node(m, f.child(), opts, cache));
    case Formula::Kind::Bang: {
      Model updated = update_model(m, f.reading());
      return eval(updated, f.child(), opts);
    }
    case Formula::Kind::Event: {
      const EventModel& em = f.event_model();
      auto e = em.event_index(f.event_id());
      if (!e) throw EvalError("unknown event '" + f.event_id() + "'");
      Model product = product_update(m, em);
      Bits inner = eval(product, f.child(), opts);
      Bits out(m.size());
      for (std::size_t w = 0; w < m.size(); ++w)
        if (inner.test(w * em.size() + *e)) out.set(w);
      return out;
    }
  }
  throw Error("unreachable formula kind in eval");
}

}  // namespace

Bits eval(const Model& m, const Formula& f, const EvalOptions& opts) {
  RelationCache cache;
  return eval_node(m, f, opts, cache);
}

bool check(const Model& m, const std::string& state, const Formula& f,
           const EvalOptions& opts) {
  auto idx = m.state_index(state);
  if (!idx) throw EvalError("unknown state '" + state + "'");
  return eval(m, f, opts).test(*idx);
}

bool valid_on_model(const Model& m, const Formula& f, const EvalOptions& opts) {
  return eval(m, f, opts).count() == m.size();
}

std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int pos, int max_block) -> void {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      cur[pos] = b;
      self(self, pos + 1, std::max(max_block, b));
    }
  };
  if (n > 0) rec(rec, 1, 0);  // cur[0] = 0 fixed
  return out;
}

Relation partition_relation(const std::vector<int>& blocks) {
  Relation r(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (blocks[i] == blocks[j]) r.set(i, j);
  return r;
}

std::string describe_partition(const std::vector<int>& blocks) {
  int max_block = 0;
  for (int b : blocks) max_block = std::max(max_block, b);
  std::string out = "{";
  for (int b = 0; b <= max_block; ++b) {
    if (b) out += ",";
    out += "{";
    bool first = true;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i] != b) continue;
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
    out += "}";
  }
  out += "}";
  return out;
}

OracleResult semantic_term_leq_check(const Term& s, const Term& t, int n_states,
                                     const OracleOptions& opts) {
  if (n_states < 1) throw Error("oracle needs at least one state");
  if (n_states > opts.max_states)
    throw ResourceError("oracle state bound exceeded: " + std::to_string(n_states) + " > " +
                        std::to_string(opts.max_states));

  std::vector<std::string> atoms;
  for (const auto& a : atoms_of(s)) atoms.push_back(a);
  for (const auto& a : atoms_of(t))
    if (std::find(atoms.begin(), atoms.end(), a) == atoms.end()) atoms.push_back(a);
  std::sort(atoms.begin(), atoms.end());

  const auto partitions = set_partitions(n_states);
  std::vector<Relation> relation_of_partition;
  relation_of_partition.reserve(partitions.size());
  for (const auto& p : partitions) relation_of_partition.push_back(partition_relation(p));

  // Odometer over assignment tuples.
  std::vector<std::size_t> pick(atoms.size(), 0);
  while (true) {
    std::map<std::string, Relation> atomic;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      atomic.emplace(atoms[i], relation_of_partition[pick[i]]);

    RelationCache cache;
    Relation rs = derived_relation(atomic, s, &cache, RelationClass::Equivalence);
    Relation rt = derived_relation(atomic, t, &cache, RelationClass::Equivalence);
    if (!rs.subset_of(rt)) {
      OracleResult res;
      res.holds = false;
      for (std::size_t i = 0; i < atoms.size(); ++i)
        res.counterexample.emplace(atoms[i], partitions[pick[i]]);
      return res;
    }

    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == partitions.size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return OracleResult{true, {}};
}

bool semantic_term_leq(const Term& s, const Term& t, int n_states, const OracleOptions& opts) {
  return semantic_term_leq_check(s, t, n_states, opts).holds;
}

namespace {

struct SchemaInstance {
  std::string schema;
  Formula formula;
};

// One random instantiation of every schema of the current mode.
std::vector<SchemaInstance> draw_instances(std::mt19937_64& rng, Model::Mode mode,
                                           const std::vector<std::string>& signature) {
  const std::vector<std::string> props{"p", "q"};
  auto f = [&] { return random_static_formula(rng, props, signature, 2, 1); };
  auto tm = [&] { return random_term(rng, signature, 2); };

  std::vector<SchemaInstance> out;
  using F = Formula;

  {
    Term t = tm();
    F phi = f(), psi = f();
    out.push_back({"K", F::implies(F::box(t, F::implies(phi, psi)),
                                   F::implies(F::box(t, phi), F::box(t, psi)))});
  }
  {
    Term t = tm();
    F phi = f();
    out.push_back({"T", F::implies(F::box(t, phi), phi)});
  }
  {
    Term t = tm();
    F phi = f();
    out.push_back({"4", F::implies(F::box(t, phi), F::box(t, F::box(t, phi)))});
  }
  if (mode == Model::Mode::S5) {
    Term t = tm();
    F phi = f();
    out.push_back({"5", F::implies(F::neg(F::box(t, phi)),
                                   F::box(t, F::neg(F::box(t, phi))))});
  }
  {
    Term t = tm();
    F phi = f();
    out.push_back({"dual", F::iff(F::diamond(t, phi), F::neg(F::box(t, F::neg(phi))))});
  }
  {
    Term t = tm();
    F phi = f();
    out.push_back({"idempotency-meet",
                   F::iff(F::diamond(Term::meet(t, t), phi), F::diamond(t, phi))});
    out.push_back({"idempotency-join",
                   F::iff(F::diamond(Term::join(t, t), phi), F::diamond(t, phi))});
  }
  {
    Term t = tm(), s = tm();
    F phi = f();
    out.push_back({"commutativity-meet", F::iff(F::diamond(Term::meet(t, s), phi),
                                                F::diamond(Term::meet(s, t), phi))});
    out.push_back({"commutativity-join", F::iff(F::diamond(Term::join(t, s), phi),
                                                F::diamond(Term::join(s, t), phi))});
  }
  {
    Term r = tm(), s = tm(), t = tm();
    F phi = f();
    out.push_back(
        {"associativity-meet", F::iff(F::diamond(Term::meet(Term::meet(r, s), t), phi),
                                      F::diamond(Term::meet(r, Term::meet(s, t)), phi))});
    out.push_back(
        {"associativity-join", F::iff(F::diamond(Term::join(Term::join(r, s), t), phi),
                                      F::diamond(Term::join(r, Term::join(s, t)), phi))});
  }
  {
    Term t = tm(), s = tm();
    F phi = f();
    out.push_back({"absorption-meet", F::iff(F::diamond(Term::meet(t, Term::join(t, s)), phi),
                                             F::diamond(t, phi))});
    out.push_back({"absorption-join", F::iff(F::diamond(Term::join(t, Term::meet(t, s)), phi),
                                             F::diamond(t, phi))});
  }
  {
    Term t = tm(), s = tm();
    F phi = f();
    Term ts = Term::join(t, s);
    out.push_back({"FP", F::iff(F::diamond(ts, phi),
                                F::disj(phi, F::disj(F::diamond(t, F::diamond(ts, phi)),
                                                     F::diamond(s, F::diamond(ts, phi)))))});
  }
  {
    Term t = tm(), s = tm();
    F phi = f();
    Term ts = Term::join(t, s);
    out.push_back(
        {"INDUC",
         F::implies(F::box(ts, F::implies(phi, F::conj(F::box(t, phi), F::box(s, phi)))),
                    F::implies(phi, F::box(ts, phi)))});
  }
  return out;
}

}  // namespace

AxiomReport axiom_suite(Model::Mode mode, int n_models, std::uint64_t seed,
                        int instances_per_schema, std::size_t max_states) {
  const std::vector<std::string> signature{"a", "b", "c"};
  std::mt19937_64 rng(seed);

  AxiomReport report;
  report.mode = mode;
  report.models = n_models;
  report.instances_per_schema = instances_per_schema;
  report.seed = seed;

  std::map<std::string, int> checks;
  for (int i = 0; i < n_models; ++i) {
    std::size_t n_states = 1 + rng() % max_states;
    Model m = random_model(rng(), n_states, signature, mode);
    for (int j = 0; j < instances_per_schema; ++j) {
      for (auto& inst : draw_instances(rng, mode, signature)) {
        ++checks[inst.schema];
        Bits ext = eval(m, inst.formula);
        if (ext.count() == m.size()) continue;
        std::size_t witness = 0;
        while (ext.test(witness)) ++witness;
        report.failures.push_back({inst.schema, to_string(inst.formula),
                                   model_to_json_string(m, -1), m.states[witness]});
      }
    }
  }
  for (const auto& [schema, n] : checks) report.checks_per_schema.emplace_back(schema, n);
  return report;
}

std::string format_report(const AxiomReport& report) {
  std::ostringstream os;
  os << "axiom suite: mode " << to_string(report.mode) << ", " << report.models
     << " models, " << report.instances_per_schema << " instances/schema, seed "
     << report.seed << "\n";
  for (const auto& [schema, n] : report.checks_per_schema) {
    int fails = 0;
    for (const auto& f : report.failures)
      if (f.schema == schema) ++fails;
    os << "  " << schema << ": " << n << " checks, " << fails << " failures\n";
  }
  for (const auto& f : report.failures)
    os << "  FAIL " << f.schema << " instance " << f.instance << " at state " << f.state
       << " in " << f.model_json << "\n";
  os << report.failures.size() << " failures";
  return os.str();
}

}  // namespace lcdk
