#include "lcdk/gen.hpp"

namespace lcdk {

Term random_term(std::mt19937_64& rng, const std::vector<std::string>& atoms, int max_depth) {
  if (max_depth <= 0 || rng() % 3 == 0)
    return Term::atom(atoms[rng() % atoms.size()]);
  Term l = random_term(rng, atoms, max_depth - 1);
  Term r = random_term(rng, atoms, max_depth - 1);
  return rng() & 1 ? Term::meet(std::move(l), std::move(r))
                   : Term::join(std::move(l), std::move(r));
}

Formula random_static_formula(std::mt19937_64& rng, const std::vector<std::string>& props,
                              const std::vector<std::string>& atoms, int max_depth,
                              int term_depth) {
  if (max_depth <= 0 || rng() % 4 == 0) return Formula::prop(props[rng() % props.size()]);
  switch (rng() % 4) {
    case 0:
      return Formula::neg(random_static_formula(rng, props, atoms, max_depth - 1, term_depth));
    case 1:
      return Formula::disj(
          random_static_formula(rng, props, atoms, max_depth - 1, term_depth),
          random_static_formula(rng, props, atoms, max_depth - 1, term_depth));
    case 2:
      return Formula::diamond(
          random_term(rng, atoms, term_depth),
          random_static_formula(rng, props, atoms, max_depth - 1, term_depth));
    default:
      return Formula::box(random_term(rng, atoms, term_depth),
                          random_static_formula(rng, props, atoms, max_depth - 1, term_depth));
  }
}

ReadingMap random_reading_map(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                              int term_depth, std::string name) {
  std::map<std::string, Term> assignment;
  for (const auto& atom : atoms) {
    if (rng() % 4 == 0) continue;  // leave some atoms at identity
    assignment.emplace(atom, random_term(rng, atoms, term_depth));
  }
  return ReadingMap(std::move(name), std::move(assignment));
}

Term mutate_equiv(std::mt19937_64& rng, const Term& t,
                  const std::vector<std::string>& atoms) {
  switch (rng() % 4) {
    case 0: {  // commute a top-level pair
      if (t.is_atom()) return t;
      return t.kind() == Term::Kind::Meet ? Term::meet(t.right(), t.left())
                                          : Term::join(t.right(), t.left());
    }
    case 1:
      return Term::meet(t, t);
    case 2:
      return Term::meet(t, Term::join(t, Term::atom(atoms[rng() % atoms.size()])));
    default:
      return Term::join(t, Term::meet(t, Term::atom(atoms[rng() % atoms.size()])));
  }
}

EventModel random_event_model(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                              std::size_t n_events, int term_depth, std::string name) {
  EventModel em;
  em.name = std::move(name);
  for (std::size_t i = 0; i < n_events; ++i) em.events.push_back("e" + std::to_string(i + 1));

  std::map<std::string, std::map<std::string, Term>> per_event;
  for (const auto& atom : atoms) {
    // Random partition of the events for this atom.
    std::vector<std::size_t> block(n_events, 0);
    std::size_t max_block = 0;
    for (std::size_t i = 1; i < n_events; ++i) {
      block[i] = rng() % (max_block + 2);
      max_block = std::max(max_block, block[i]);
    }
    Relation rel(n_events);
    for (std::size_t i = 0; i < n_events; ++i)
      for (std::size_t j = 0; j < n_events; ++j)
        if (block[i] == block[j]) rel.set(i, j);
    em.atomic.emplace(atom, std::move(rel));

    // One target term per block; events in a block read order-equivalent
    // variants of it.
    std::vector<Term> block_term;
    for (std::size_t b = 0; b <= max_block; ++b)
      block_term.push_back(random_term(rng, atoms, term_depth));
    for (std::size_t i = 0; i < n_events; ++i) {
      Term target = block_term[block[i]];
      if (rng() % 3 == 0) target = mutate_equiv(rng, target, atoms);
      per_event[em.events[i]].emplace(atom, std::move(target));
    }
  }

  for (auto& [event, assignment] : per_event)
    em.reading.emplace(event, ReadingMap(em.name + ":" + event, std::move(assignment)));
  return em;
}

}  // namespace lcdk
