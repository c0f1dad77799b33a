#pragma once

#include "lcdk/formula.hpp"
#include "lcdk/model.hpp"
#include "lcdk/reading.hpp"

namespace lcdk {

// Semi-public reading: everybody sees who reads what source, not what is
// read. The updated model keeps states and valuation and re-derives each
// atomic relation from the term the atom now reads.
Model update_model(const Model& m, const ReadingMap& beta);

// Eliminates every [!map] operator by pushing it through the formula:
// it vanishes on propositions, commutes with ~ and |, and turns [t] into
// [beta'(t)]. Innermost operators are rewritten first; the result is in
// the static language. Event operators are not handled here.
Formula reduce_bang(const Formula& f);

}  // namespace lcdk
