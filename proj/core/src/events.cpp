#include "lcdk/events.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

#include "lcdk/errors.hpp"
#include "lcdk/semipublic.hpp"

namespace lcdk {

std::string product_state_name(const std::string& state, const std::string& event) {
  return state + "@" + event;
}

namespace {

Term gamma_at(const EventModel& em, std::size_t event, const Term& t, RelationCache& cache) {
  switch (t.kind()) {
    case Term::Kind::Atom:
      return em.reading_for(em.events[event]).read(t.atom_name());
    case Term::Kind::Meet:
      return Term::meet(gamma_at(em, event, t.left(), cache),
                        gamma_at(em, event, t.right(), cache));
    case Term::Kind::Join: {
      Relation rel = relation_of(em, t, &cache);
      std::vector<Term> summands;
      for (std::size_t f = 0; f < em.size(); ++f) {
        if (!rel.at(event, f)) continue;
        summands.push_back(Term::join(gamma_at(em, f, t.left(), cache),
                                      gamma_at(em, f, t.right(), cache)));
      }
      assert(!summands.empty());  // the relation is reflexive
      Term sum = summands.front();
      for (std::size_t i = 1; i < summands.size(); ++i) sum = Term::join(sum, summands[i]);
      // Canonical order so equal classes produce identical terms.
      return flatten(sum).to_term();
    }
  }
  throw Error("unreachable term kind in gamma");
}

}  // namespace

Term gamma(const EventModel& em, const std::string& event, const Term& t,
           RelationCache* event_cache) {
  auto idx = em.event_index(event);
  if (!idx) throw EvalError("unknown event '" + event + "'");
  if (event_cache) return gamma_at(em, *idx, t, *event_cache);
  RelationCache local;
  return gamma_at(em, *idx, t, local);
}

Model product_update(const Model& m, const EventModel& em) {
  std::vector<std::string> model_sig = m.signature;
  std::sort(model_sig.begin(), model_sig.end());
  if (em.signature() != model_sig)
    throw SignatureError("model and event model disagree on the signature");

  const std::size_t nw = m.size();
  const std::size_t ne = em.size();
  Model out;
  out.signature = m.signature;
  out.states.reserve(nw * ne);
  for (std::size_t w = 0; w < nw; ++w)
    for (std::size_t e = 0; e < ne; ++e)
      out.states.push_back(product_state_name(m.states[w], em.events[e]));

  RelationCache cache;
  for (const auto& atom : m.signature) {
    const Relation& ev_rel = em.atomic.at(atom);
    // Relation of the term each event reads for this atom, per event.
    std::vector<Relation> read_rel;
    read_rel.reserve(ne);
    for (std::size_t e = 0; e < ne; ++e)
      read_rel.push_back(relation_of(m, em.reading_for(em.events[e]).read(atom), &cache));

    Relation rel(nw * ne);
    for (std::size_t w = 0; w < nw; ++w)
      for (std::size_t e = 0; e < ne; ++e)
        for (std::size_t w2 = 0; w2 < nw; ++w2)
          for (std::size_t e2 = 0; e2 < ne; ++e2)
            if (read_rel[e].at(w, w2) && ev_rel.at(e, e2))
              rel.set(w * ne + e, w2 * ne + e2);
    out.atomic.emplace(atom, std::move(rel));
  }

  for (const auto& [prop, set] : m.valuation) {
    Bits lifted(nw * ne);
    for (std::size_t w = 0; w < nw; ++w)
      if (set.test(w))
        for (std::size_t e = 0; e < ne; ++e) lifted.set(w * ne + e);
    out.valuation.emplace(prop, std::move(lifted));
  }

  out.mode = detect_mode(out) == DetectedMode::S5 ? Model::Mode::S5 : Model::Mode::S4;
  return out;
}

namespace {

// [em,e]psi for static psi, fully rewritten.
Formula push_event(const std::shared_ptr<const EventModel>& em, std::size_t event,
                   const Formula& psi, RelationCache& cache) {
  switch (psi.kind()) {
    case Formula::Kind::Prop:
      return psi;
    case Formula::Kind::Neg:
      return Formula::neg(push_event(em, event, psi.child(), cache));
    case Formula::Kind::Or:
      return Formula::disj(push_event(em, event, psi.lhs(), cache),
                           push_event(em, event, psi.rhs(), cache));
    case Formula::Kind::Box:
    case Formula::Kind::Diamond: {
      Relation rel = relation_of(*em, psi.term(), &cache);
      Term guard = flatten(gamma_at(*em, event, psi.term(), cache)).to_term();
      std::vector<Formula> parts;
      for (std::size_t f = 0; f < em->size(); ++f) {
        if (!rel.at(event, f)) continue;
        Formula inner = push_event(em, f, psi.child(), cache);
        parts.push_back(psi.kind() == Formula::Kind::Box ? Formula::box(guard, inner)
                                                         : Formula::diamond(guard, inner));
      }
      return psi.kind() == Formula::Kind::Box ? conj_all(parts) : disj_all(parts);
    }
    case Formula::Kind::Bang:
    case Formula::Kind::Event:
      break;
  }
  throw Error("push_event applied to a non-static formula");
}

}  // namespace

Formula reduce_event(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Prop:
      return f;
    case Formula::Kind::Neg:
      return Formula::neg(reduce_event(f.child()));
    case Formula::Kind::Or:
      return Formula::disj(reduce_event(f.lhs()), reduce_event(f.rhs()));
    case Formula::Kind::Diamond:
      return Formula::diamond(f.term(), reduce_event(f.child()));
    case Formula::Kind::Box:
      return Formula::box(f.term(), reduce_event(f.child()));
    case Formula::Kind::Bang: {
      // Delegate to the semi-public rewriter on the already-static body.
      Formula body = reduce_event(f.child());
      return reduce_bang(Formula::bang(f.reading_ptr(), std::move(body)));
    }
    case Formula::Kind::Event: {
      Formula body = reduce_event(f.child());
      auto em = f.event_model_ptr();
      auto idx = em->event_index(f.event_id());
      if (!idx) throw EvalError("unknown event '" + f.event_id() + "'");
      RelationCache cache;
      return push_event(em, *idx, body, cache);
    }
  }
  return f;
}

}  // namespace lcdk
