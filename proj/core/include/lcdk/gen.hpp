#pragma once

#include <random>
#include <string>
#include <vector>

#include "lcdk/event_model.hpp"
#include "lcdk/formula.hpp"
#include "lcdk/model.hpp"
#include "lcdk/reading.hpp"
#include "lcdk/term.hpp"

namespace lcdk {

// Random structure builders shared by the axiom suite, the acceptance
// harness and property tests. All are deterministic in the engine state.

Term random_term(std::mt19937_64& rng, const std::vector<std::string>& atoms, int max_depth);

// Static formula over the given propositions; modal operators use random
// terms of depth <= term_depth.
Formula random_static_formula(std::mt19937_64& rng, const std::vector<std::string>& props,
                              const std::vector<std::string>& atoms, int max_depth,
                              int term_depth = 1);

ReadingMap random_reading_map(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                              int term_depth = 2, std::string name = "beta");

// Applies a random order-preserving rewrite (commute, idempotent
// duplicate, absorption pad); the result is always term_equiv to t.
Term mutate_equiv(std::mt19937_64& rng, const Term& t,
                  const std::vector<std::string>& atoms);

// Valid reading event model: per atom, a random partition of the events
// where each block shares one reading target (up to order-preserving
// mutation), so related events always read equivalent terms.
EventModel random_event_model(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                              std::size_t n_events, int term_depth = 1,
                              std::string name = "E");

}  // namespace lcdk
