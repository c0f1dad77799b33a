#pragma once

#include <string>

#include "lcdk/event_model.hpp"
#include "lcdk/formula.hpp"
#include "lcdk/model.hpp"

namespace lcdk {

// Product-state naming convention, "w@e". States of a product are laid
// out state-major: index(w, e) = w * |E| + e.
std::string product_state_name(const std::string& state, const std::string& event);

// Term describing, from the perspective of event e, which relation of
// the original model the product relation of t projects onto. Atoms go
// through e's reading map, meets are componentwise, and a join is the
// canonically ordered join of the unfolded pairs over e's equivalence
// class under the derived event relation of the join.
Term gamma(const EventModel& em, const std::string& event, const Term& t,
           RelationCache* event_cache = nullptr);

// Product of a model with a reading event model: states are pairs, the
// valuation ignores the event component, and an atomic relation holds
// between (w,e) and (w',e') when w reaches w' under the term e reads for
// that atom and e reaches e' in the event model. The result's mode field
// is the detected mode; callers worried about regularity should validate.
Model product_update(const Model& m, const EventModel& em);

// Eliminates every [model.event] and [!map] operator, innermost first.
// The modal case expands into a conjunction over the event's class, with
// flattened gamma terms on the boxes.
Formula reduce_event(const Formula& f);

}  // namespace lcdk
