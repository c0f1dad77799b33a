#include <doctest.h>

#include <memory>
#include <random>

#include "lcdk/checker.hpp"
#include "lcdk/errors.hpp"
#include "lcdk/events.hpp"
#include "lcdk/gen.hpp"
#include "lcdk/parser.hpp"
#include "lcdk/semipublic.hpp"

using namespace lcdk;

namespace {

const std::vector<std::string> kSig{"a", "b", "c"};

EventModel singleton_event(const ReadingMap& beta) {
  EventModel em;
  em.name = "E";
  em.events = {"e"};
  em.reading.emplace("e", beta);
  for (const auto& atom : kSig) em.atomic.emplace(atom, Relation::identity(1));
  return em;
}

// Two events; only R_b glues them, so their readings of a may differ.
EventModel two_event_model() {
  EventModel em;
  em.name = "E2";
  em.events = {"e", "f"};
  em.reading.emplace("e", ReadingMap("Se", {{"a", parse_term("a")},
                                            {"b", parse_term("b")}}));
  em.reading.emplace("f", ReadingMap("Sf", {{"a", parse_term("a*c")},
                                            {"b", parse_term("b")}}));
  Relation glued = Relation::full(2);
  em.atomic = {{"a", Relation::identity(2)},
               {"b", glued},
               {"c", Relation::identity(2)}};
  return em;
}

// Copy of f with every modal term in canonical flattened form.
Formula normalize_terms(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Prop: return f;
    case Formula::Kind::Neg: return Formula::neg(normalize_terms(f.child()));
    case Formula::Kind::Or:
      return Formula::disj(normalize_terms(f.lhs()), normalize_terms(f.rhs()));
    case Formula::Kind::Diamond:
      return Formula::diamond(flatten(f.term()).to_term(), normalize_terms(f.child()));
    case Formula::Kind::Box:
      return Formula::box(flatten(f.term()).to_term(), normalize_terms(f.child()));
    case Formula::Kind::Bang:
      return Formula::bang(f.reading_ptr(), normalize_terms(f.child()));
    case Formula::Kind::Event:
      return Formula::event(f.event_model_ptr(), f.event_id(), normalize_terms(f.child()));
  }
  return f;
}

// The gamma characterization of a product relation, built directly.
Relation gamma_side(const Model& m, const EventModel& em, const Term& tau) {
  Relation ev = relation_of(em, tau);
  Relation out(m.size() * em.size());
  for (std::size_t e = 0; e < em.size(); ++e) {
    Relation base = relation_of(m, gamma(em, em.events[e], tau));
    for (std::size_t w = 0; w < m.size(); ++w)
      for (std::size_t w2 = 0; w2 < m.size(); ++w2)
        for (std::size_t e2 = 0; e2 < em.size(); ++e2)
          if (base.at(w, w2) && ev.at(e, e2))
            out.set(w * em.size() + e, w2 * em.size() + e2);
  }
  return out;
}

}  // namespace

TEST_CASE("event model validation") {
  std::mt19937_64 rng(83);
  EventModel ok = singleton_event(random_reading_map(rng, kSig));
  CHECK(validate_event_model(ok).ok());
  CHECK(validate_event_model(two_event_model()).ok());

  // Related events reading a and a*b disagree up to equivalence.
  EventModel bad = two_event_model();
  bad.atomic["a"] = Relation::full(2);
  bad.reading.find("f")->second = ReadingMap("Sf", {{"a", parse_term("a*b")}});
  auto report = validate_event_model(bad);
  REQUIRE_FALSE(report.ok());
  bool mentions = false;
  for (const auto& issue : report.issues)
    mentions = mentions || issue.find("inequivalent") != std::string::npos;
  CHECK(mentions);

  // Absorption-equivalent readings are fine.
  EventModel fine = two_event_model();
  fine.atomic["a"] = Relation::full(2);
  fine.reading.find("e")->second = ReadingMap("Se", {{"a", parse_term("a*(a+b)")}});
  fine.reading.find("f")->second = ReadingMap("Sf", {{"a", parse_term("a")}});
  CHECK(validate_event_model(fine).ok());

  EventModel empty;
  CHECK_FALSE(validate_event_model(empty).ok());
}

TEST_CASE("gamma: base clause and singleton case") {
  std::mt19937_64 rng(89);
  ReadingMap beta = random_reading_map(rng, kSig);
  EventModel em = singleton_event(beta);

  CHECK(gamma(em, "e", Term::atom("a")) == beta.read("a"));
  CHECK(gamma(em, "e", Term::atom("b")) == beta.read("b"));
  for (int i = 0; i < 30; ++i) {
    Term tau = random_term(rng, kSig, 2);
    CHECK(term_equiv(gamma(em, "e", tau), beta.extend(tau)));
  }
  CHECK_THROWS_AS(gamma(em, "nope", Term::atom("a")), EvalError);
}

TEST_CASE("gamma unfolds joins over the event class") {
  EventModel em = two_event_model();
  Term got = gamma(em, "e", parse_term("a+b"));
  Term expected = parse_term("(a+b) + ((a*c)+b)");
  CHECK(term_equiv(got, expected));

  // Stability: both events in the class describe the same join.
  CHECK(term_equiv(gamma(em, "e", parse_term("a+b")), gamma(em, "f", parse_term("a+b"))));
}

TEST_CASE("product with a singleton identity event is the original model") {
  Model m = random_model(401, 3, kSig, Model::Mode::S5);
  EventModel em = singleton_event(ReadingMap());
  Model p = product_update(m, em);
  REQUIRE(p.size() == m.size());
  CHECK(p.states[0] == "w1@e");
  for (const auto& atom : kSig) CHECK(p.atomic.at(atom) == m.atomic.at(atom));
  for (const auto& [prop, set] : m.valuation) CHECK(p.valuation.at(prop) == set);
}

TEST_CASE("product with a singleton reading event is the semi-public update") {
  std::mt19937_64 rng(97);
  for (int i = 0; i < 20; ++i) {
    Model m = random_model(rng(), 2 + rng() % 4, kSig,
                           i % 2 ? Model::Mode::S5 : Model::Mode::S4);
    ReadingMap beta = random_reading_map(rng, kSig);
    Model p = product_update(m, singleton_event(beta));
    Model u = update_model(m, beta);
    for (const auto& atom : kSig) CHECK(p.atomic.at(atom) == u.atomic.at(atom));
  }
}

TEST_CASE("product relations match their gamma characterization") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 25; ++i) {
    Model m = random_model(rng(), 2 + rng() % 4, kSig,
                           i % 2 ? Model::Mode::S5 : Model::Mode::S4);
    EventModel em = random_event_model(rng, kSig, 1 + rng() % 3);
    REQUIRE(validate_event_model(em).ok());
    Model p = product_update(m, em);
    for (int k = 0; k < 10; ++k) {
      Term tau = random_term(rng, kSig, 2);
      CHECK(relation_of(p, tau) == gamma_side(m, em, tau));
    }
  }
}

TEST_CASE("products of valid inputs stay regular") {
  std::mt19937_64 rng(107);
  for (int i = 0; i < 30; ++i) {
    Model::Mode mode = i % 2 ? Model::Mode::S5 : Model::Mode::S4;
    Model m = random_model(rng(), 2 + rng() % 4, kSig, mode);
    EventModel em = random_event_model(rng, kSig, 1 + rng() % 3);
    Model p = product_update(m, em);
    DetectedMode detected = detect_mode(p);
    CHECK(detected != DetectedMode::Irregular);
    // S4 inputs may happen to be symmetric, so the detected mode can be
    // stronger than the input mode, never weaker.
    if (mode == Model::Mode::S5) CHECK(detected == DetectedMode::S5);
    CHECK(validate_model(p).ok());
  }
}

TEST_CASE("reduce_event: base law and singleton agreement with reduce_bang") {
  std::mt19937_64 rng(109);
  ReadingMap beta = random_reading_map(rng, kSig);
  auto em = std::make_shared<EventModel>(singleton_event(beta));
  auto beta_ptr = std::make_shared<ReadingMap>(beta);

  CHECK(reduce_event(Formula::event(em, "e", Formula::prop("p"))) == Formula::prop("p"));

  for (int i = 0; i < 20; ++i) {
    Term tau = random_term(rng, kSig, 2);
    Formula phi = random_static_formula(rng, {"p", "q"}, kSig, 2);
    Formula via_event = reduce_event(Formula::event(em, "e", Formula::box(tau, phi)));
    Formula via_bang = reduce_bang(Formula::bang(beta_ptr, Formula::box(tau, phi)));
    REQUIRE(via_event.kind() == Formula::Kind::Box);
    REQUIRE(via_bang.kind() == Formula::Kind::Box);
    CHECK(flatten(via_event.term()) == flatten(via_bang.term()));
    CHECK(normalize_terms(via_event) == normalize_terms(via_bang));

    Model m = random_model(rng(), 3, kSig, Model::Mode::S5);
    CHECK(eval(m, via_event) == eval(m, via_bang));
  }
}

TEST_CASE("event evaluation, product evaluation and reduction agree") {
  std::mt19937_64 rng(113);
  for (int i = 0; i < 30; ++i) {
    Model m = random_model(rng(), 2 + rng() % 3, kSig,
                           i % 2 ? Model::Mode::S5 : Model::Mode::S4);
    auto em = std::make_shared<EventModel>(random_event_model(rng, kSig, 1 + rng() % 3));
    REQUIRE(validate_event_model(*em).ok());
    std::string e = em->events[rng() % em->events.size()];
    Formula phi = random_static_formula(rng, {"p", "q"}, kSig, 2);
    Formula f = Formula::event(em, e, phi);

    Bits direct = eval(m, f);
    Formula reduced = reduce_event(f);
    CHECK(is_static(reduced));
    CHECK(direct == eval(m, reduced));

    // Spelled-out projection of the product evaluation.
    Model p = product_update(m, *em);
    Bits inner = eval(p, phi);
    std::size_t ei = *em->event_index(e);
    Bits projected(m.size());
    for (std::size_t w = 0; w < m.size(); ++w)
      if (inner.test(w * em->size() + ei)) projected.set(w);
    CHECK(direct == projected);
  }
}

TEST_CASE("the modal law expands into a class conjunction") {
  std::mt19937_64 rng(127);
  for (int i = 0; i < 20; ++i) {
    Model m = random_model(rng(), 2 + rng() % 3, kSig, Model::Mode::S5);
    auto em = std::make_shared<EventModel>(random_event_model(rng, kSig, 2 + rng() % 2));
    REQUIRE(validate_event_model(*em).ok());
    std::string e = em->events[rng() % em->events.size()];
    Term tau = random_term(rng, kSig, 2);
    Formula phi = random_static_formula(rng, {"p", "q"}, kSig, 1);

    Formula lhs = Formula::event(em, e, Formula::box(tau, phi));

    Relation ev = relation_of(*em, tau);
    std::size_t ei = *em->event_index(e);
    Term guard = gamma(*em, e, tau);
    std::vector<Formula> conjuncts;
    for (std::size_t f2 = 0; f2 < em->size(); ++f2)
      if (ev.at(ei, f2))
        conjuncts.push_back(
            Formula::box(guard, Formula::event(em, em->events[f2], phi)));
    CHECK(eval(m, lhs) == eval(m, conj_all(conjuncts)));
  }
}

TEST_CASE("product requires a shared signature") {
  Model m = random_model(11, 3, {"a", "b"}, Model::Mode::S5);
  std::mt19937_64 rng(131);
  EventModel em = random_event_model(rng, kSig, 2);
  CHECK_THROWS_AS(product_update(m, em), SignatureError);
}
