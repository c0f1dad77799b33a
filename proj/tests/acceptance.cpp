// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails. Everything is
// deterministic (fixed seeds) and runs at desk scale.

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lcdk/checker.hpp"
#include "lcdk/closure.hpp"
#include "lcdk/events.hpp"
#include "lcdk/gen.hpp"
#include "lcdk/io.hpp"
#include "lcdk/model.hpp"
#include "lcdk/parser.hpp"
#include "lcdk/semipublic.hpp"
#include "lcdk/term.hpp"

using namespace lcdk;

namespace {

const std::vector<std::string> kSig{"a", "b", "c"};

struct Outcome {
  bool pass = false;
  std::string detail;
};

// All terms over {a,b,c} with at most two meet/join operators each.
std::vector<Term> terms_up_to_two_ops() {
  std::vector<Term> depth0, depth1, out;
  for (const auto& a : kSig) depth0.push_back(Term::atom(a));
  for (const auto& l : depth0)
    for (const auto& r : depth0) {
      depth1.push_back(Term::meet(l, r));
      depth1.push_back(Term::join(l, r));
    }
  out = depth0;
  out.insert(out.end(), depth1.begin(), depth1.end());
  // Two operators: one-op term combined with an atom, either way around.
  for (const auto& one : depth1)
    for (const auto& atom : depth0) {
      out.push_back(Term::meet(one, atom));
      out.push_back(Term::join(one, atom));
      out.push_back(Term::meet(atom, one));
      out.push_back(Term::join(atom, one));
    }
  return out;
}

// All terms over {a,b,c} of depth <= 2.
std::vector<Term> terms_up_to_depth2() {
  std::vector<Term> depth0, depth01, out;
  for (const auto& a : kSig) depth0.push_back(Term::atom(a));
  depth01 = depth0;
  for (const auto& l : depth0)
    for (const auto& r : depth0) {
      depth01.push_back(Term::meet(l, r));
      depth01.push_back(Term::join(l, r));
    }
  out = depth01;
  for (const auto& l : depth01)
    for (const auto& r : depth01) {
      if (l.is_atom() && r.is_atom()) continue;  // already counted
      out.push_back(Term::meet(l, r));
      out.push_back(Term::join(l, r));
    }
  return out;
}

// 4-state relations as 16-bit masks for the exhaustive pair sweep.
std::uint16_t mask_of(const Relation& r) {
  std::uint16_t m = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (r.at(i, j)) m |= static_cast<std::uint16_t>(1u << (i * 4 + j));
  return m;
}

Outcome criterion_term_order_agreement() {
  const std::vector<Term> terms = terms_up_to_two_ops();
  const std::size_t n = terms.size();

  // Syntactic side.
  std::vector<std::vector<bool>> syntactic(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) syntactic[i][j] = term_leq(terms[i], terms[j]);

  // Semantic side: sweep every assignment of 4-point partitions to
  // {a,b,c} once, refuting pairs as soon as containment fails anywhere.
  std::vector<std::vector<bool>> semantic(n, std::vector<bool>(n, true));
  const auto partitions = set_partitions(4);
  std::vector<Relation> prel;
  for (const auto& p : partitions) prel.push_back(partition_relation(p));

  for (const auto& ra : prel)
    for (const auto& rb : prel)
      for (const auto& rc : prel) {
        std::map<std::string, Relation> atomic{{"a", ra}, {"b", rb}, {"c", rc}};
        RelationCache cache;
        std::vector<std::uint16_t> mask(n);
        for (std::size_t i = 0; i < n; ++i)
          mask[i] = mask_of(derived_relation(atomic, terms[i], &cache));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (semantic[i][j] && (mask[i] & ~mask[j])) semantic[i][j] = false;
      }

  // The matrix must agree with the per-pair oracle operation itself.
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 300; ++k) {
    std::size_t i = rng() % n, j = rng() % n;
    if (semantic_term_leq(terms[i], terms[j], 4) != semantic[i][j])
      return {false, "internal sweep disagrees with semantic_term_leq on pair " +
                         to_string(terms[i]) + " <= " + to_string(terms[j])};
  }

  std::size_t discrepancies = 0;
  std::ostringstream detail;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (syntactic[i][j] != semantic[i][j]) {
        ++discrepancies;
        if (discrepancies <= 5) {
          bool at5 = semantic_term_leq(terms[i], terms[j], 5, OracleOptions{5});
          detail << "\n    BLOCKING FINDING: " << to_string(terms[i]) << " <= "
                 << to_string(terms[j]) << ": whitman=" << syntactic[i][j]
                 << " oracle4=" << semantic[i][j] << " oracle5=" << at5;
        }
      }

  std::ostringstream ok;
  ok << n << " terms, " << n * n << " ordered pairs, " << discrepancies << " discrepancies"
     << detail.str();
  return {discrepancies == 0, ok.str()};
}

Outcome criterion_example_inequality() {
  Term weaker = parse_term("b*a + c*a");
  Term stronger = parse_term("(b+c)*a");
  if (!term_leq(weaker, stronger)) return {false, "expected b*a + c*a <= (b+c)*a"};
  if (term_leq(stronger, weaker)) return {false, "unexpected (b+c)*a <= b*a + c*a"};

  auto oracle = semantic_term_leq_check(stronger, weaker, 4);
  if (oracle.holds) return {false, "oracle found no countermodel at 4 states"};

  // Re-check the emitted witness independently.
  std::map<std::string, Relation> atomic;
  std::ostringstream witness;
  for (const auto& [atom, blocks] : oracle.counterexample) {
    atomic.emplace(atom, partition_relation(blocks));
    witness << " " << atom << "=" << describe_partition(blocks);
  }
  if (derived_relation(atomic, stronger).subset_of(derived_relation(atomic, weaker)))
    return {false, "emitted witness does not refute the containment"};
  return {true, "countermodel:" + witness.str()};
}

Outcome criterion_soundness_suite() {
  AxiomReport s5 = axiom_suite(Model::Mode::S5, 200, 42, 20);
  if (!s5.ok())
    return {false, "S5 suite reported " + std::to_string(s5.failures.size()) + " failures"};
  AxiomReport s4 = axiom_suite(Model::Mode::S4, 200, 42, 20);
  if (!s4.ok())
    return {false, "S4 suite reported " + std::to_string(s4.failures.size()) + " failures"};
  for (const auto& [schema, count] : s4.checks_per_schema)
    if (schema == "5") return {false, "S4 suite must exclude schema 5"};

  // Sanity: the machinery can fail. Schema 5 breaks on a non-symmetric
  // preorder.
  Model m;
  m.mode = Model::Mode::S4;
  m.states = {"w1", "w2"};
  m.signature = {"a"};
  Relation r = Relation::identity(2);
  r.set(0, 1);
  m.atomic = {{"a", r}};
  Bits p(2);
  p.set(1);
  m.valuation = {{"p", p}};
  Formula five = parse_formula("~[a]p -> [a]~[a]p");
  if (valid_on_model(m, five)) return {false, "schema 5 unexpectedly valid on the witness"};

  int checks = 0;
  for (const auto& [schema, count] : s5.checks_per_schema) checks += count;
  return {true, "S5 and S4 suites clean (" + std::to_string(checks) +
                    " S5 checks); schema-5 witness fails as expected"};
}

Outcome criterion_semipublic_triple_equality() {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 100; ++i) {
    Model m = random_model(rng(), 2 + rng() % 5, kSig,
                           i % 2 ? Model::Mode::S5 : Model::Mode::S4);
    auto beta = std::make_shared<ReadingMap>(random_reading_map(rng, kSig));
    Formula phi = random_static_formula(rng, {"p", "q", "r"}, kSig, 3);
    Formula banged = Formula::bang(beta, phi);

    Bits by_delegation = eval(m, banged);
    Bits by_update = eval(update_model(m, *beta), phi);
    Bits by_reduction = eval(m, reduce_bang(banged));
    if (!(by_delegation == by_update) || !(by_delegation == by_reduction)) {
      return {false, "mismatch at sample " + std::to_string(i) + " for " +
                         to_string(banged)};
    }
  }
  return {true, "100 samples, 0 mismatches"};
}

Outcome criterion_gamma_characterization() {
  std::mt19937_64 rng(777);
  const std::vector<Term> taus = terms_up_to_depth2();
  for (int i = 0; i < 100; ++i) {
    Model m = random_model(rng(), 2 + rng() % 4, kSig,
                           i % 2 ? Model::Mode::S5 : Model::Mode::S4);
    EventModel em = random_event_model(rng, kSig, 1 + rng() % 3);
    if (!validate_event_model(em).ok())
      return {false, "generator produced an invalid event model"};
    Model product = product_update(m, em);

    RelationCache pcache, ecache;
    for (const auto& tau : taus) {
      Relation lhs = relation_of(product, tau, &pcache);
      Relation ev = relation_of(em, tau, &ecache);
      Relation rhs(product.size());
      for (std::size_t e = 0; e < em.size(); ++e) {
        Relation base = relation_of(m, gamma(em, em.events[e], tau, &ecache));
        for (std::size_t w = 0; w < m.size(); ++w)
          for (std::size_t w2 = 0; w2 < m.size(); ++w2)
            for (std::size_t e2 = 0; e2 < em.size(); ++e2)
              if (base.at(w, w2) && ev.at(e, e2))
                rhs.set(w * em.size() + e, w2 * em.size() + e2);
      }
      if (!(lhs == rhs))
        return {false, "characterization fails for " + to_string(tau) + " at sample " +
                           std::to_string(i)};
    }
  }
  return {true, "100 model/event pairs x " + std::to_string(taus.size()) +
                    " terms, exact equality"};
}

Outcome criterion_event_reduction() {
  std::mt19937_64 rng(90210);
  for (int i = 0; i < 100; ++i) {
    Model m = random_model(rng(), 2 + rng() % 4, kSig,
                           i % 2 ? Model::Mode::S5 : Model::Mode::S4);
    auto em = std::make_shared<EventModel>(random_event_model(rng, kSig, 1 + rng() % 3));
    if (!validate_event_model(*em).ok())
      return {false, "generator produced an invalid event model"};
    std::string e = em->events[rng() % em->events.size()];
    Term tau = random_term(rng, kSig, 2);
    Formula phi = random_static_formula(rng, {"p", "q"}, kSig, 2);

    // Modal law: [E,e][tau]phi against its class conjunction.
    Formula lhs = Formula::event(em, e, Formula::box(tau, phi));
    Relation ev = relation_of(*em, tau);
    std::size_t ei = *em->event_index(e);
    Term guard = gamma(*em, e, tau);
    std::vector<Formula> conjuncts;
    for (std::size_t f2 = 0; f2 < em->size(); ++f2)
      if (ev.at(ei, f2))
        conjuncts.push_back(Formula::box(guard, Formula::event(em, em->events[f2], phi)));
    if (!(eval(m, lhs) == eval(m, conj_all(conjuncts))))
      return {false, "modal law mismatch at sample " + std::to_string(i)};

    // Full reduction against product semantics.
    Formula mixed = Formula::event(em, e, Formula::box(tau, phi));
    Formula reduced = reduce_event(mixed);
    if (!is_static(reduced)) return {false, "reduce_event left a dynamic operator"};
    if (!(eval(m, mixed) == eval(m, reduced)))
      return {false, "full reduction mismatch at sample " + std::to_string(i)};
  }
  return {true, "100 samples, 0 mismatches"};
}

Outcome criterion_card_example_end_to_end() {
  auto beta = std::make_shared<ReadingMap>(
      "beta", std::map<std::string, Term>{{"a", parse_term("a*(b+c)")},
                                          {"b", parse_term("b*a")},
                                          {"c", parse_term("c*a")}});
  Formula claim = Formula::bang(
      beta, Formula::implies(parse_formula("[a]q"), parse_formula("[b+c]q")));
  Formula converse = Formula::bang(
      beta, Formula::implies(parse_formula("[b+c]q"), parse_formula("[a]q")));

  std::mt19937_64 rng(1001);
  std::string counter_json;
  std::string counter_state;
  for (int i = 0; i < 100; ++i) {
    Model m = random_model(rng(), 2 + rng() % 4, kSig, Model::Mode::S5);
    if (!valid_on_model(m, claim))
      return {false, "the reading claim failed on sample " + std::to_string(i)};
    if (counter_json.empty()) {
      Bits ext = eval(m, converse);
      if (ext.count() != m.size()) {
        std::size_t w = 0;
        while (ext.test(w)) ++w;
        counter_json = model_to_json_string(m, -1);
        counter_state = m.states[w];
      }
    }
  }
  if (counter_json.empty())
    return {false, "no countermodel to the converse surfaced in 100 samples"};
  return {true, "claim valid on 100 random S5 models; converse fails at " + counter_state +
                    " in " + counter_json};
}

Outcome criterion_fl_closure() {
  auto fl = fl_closure({parse_formula("<a+b>p")});
  if (fl.size() != 4) return {false, "join closure size " + std::to_string(fl.size())};
  if (neg_fl_closure({parse_formula("<a+b>p")}).size() != 8)
    return {false, "negation closure size off"};
  auto nested = fl_closure({parse_formula("<(a+b)+c>p")});  // must terminate
  return {true, "sizes 4 and 8; nested join closes with " +
                    std::to_string(nested.size()) + " formulas"};
}

Outcome criterion_parser_round_trip() {
  Environment env;
  std::map<std::string, Term> assignment;
  assignment.emplace("a", parse_term("a*(b+c)"));
  env.reading_maps["beta1"] = std::make_shared<ReadingMap>("beta1", std::move(assignment));
  std::mt19937_64 seed_rng(55);
  env.event_models["E1"] =
      std::make_shared<EventModel>(random_event_model(seed_rng, kSig, 2, 1, "E1"));

  std::mt19937_64 rng(303);
  std::function<Formula(int)> gen = [&](int depth) -> Formula {
    if (depth <= 0 || rng() % 5 == 0) {
      const char* props[] = {"p", "q", "r"};
      return Formula::prop(props[rng() % 3]);
    }
    switch (rng() % 6) {
      case 0: return Formula::neg(gen(depth - 1));
      case 1: return Formula::disj(gen(depth - 1), gen(depth - 1));
      case 2: return Formula::diamond(random_term(rng, kSig, 2), gen(depth - 1));
      case 3: return Formula::box(random_term(rng, kSig, 2), gen(depth - 1));
      case 4: return Formula::bang(env.reading_maps.at("beta1"), gen(depth - 1));
      default: {
        const auto& em = env.event_models.at("E1");
        return Formula::event(em, em->events[rng() % em->events.size()], gen(depth - 1));
      }
    }
  };

  for (int i = 0; i < 1000; ++i) {
    Formula f = gen(5);
    if (!(parse_formula(to_string(f), env) == f))
      return {false, "round trip failed for " + to_string(f)};
  }
  return {true, "1000 formulas, parse(print(f)) == f"};
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"term-order agreement (3 atoms, <=2 ops, oracle at 4 states)",
       criterion_term_order_agreement},
      {"card-example inequality with emitted countermodel", criterion_example_inequality},
      {"axiom soundness suites (S5/S4, 200 models)", criterion_soundness_suite},
      {"semi-public triple equality (100 samples)", criterion_semipublic_triple_equality},
      {"product relations match the gamma characterization",
       criterion_gamma_characterization},
      {"event reduction laws (100 samples)", criterion_event_reduction},
      {"card example end to end", criterion_card_example_end_to_end},
      {"FL-closure sizes and nested-join termination", criterion_fl_closure},
      {"parser round trip (1000 formulas)", criterion_parser_round_trip},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::cout << "[" << i + 1 << "/" << criteria.size() << "] "
              << (outcome.pass ? "PASS" : "FAIL") << "  " << criteria[i].name;
    if (!outcome.detail.empty()) std::cout << " — " << outcome.detail;
    std::cout << "\n";
  }
  std::cout << (failed == 0 ? "ACCEPTANCE: all criteria passed"
                            : "ACCEPTANCE: " + std::to_string(failed) + " criteria FAILED")
            << "\n";
  return failed == 0 ? 0 : 1;
}
