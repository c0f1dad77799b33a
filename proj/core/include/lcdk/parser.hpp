#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "lcdk/event_model.hpp"
#include "lcdk/formula.hpp"
#include "lcdk/reading.hpp"
#include "lcdk/term.hpp"

namespace lcdk {

// Named definitions that `[!name]` and `[name.event]` resolve against.
struct Environment {
  std::map<std::string, std::shared_ptr<const ReadingMap>> reading_maps;
  std::map<std::string, std::shared_ptr<const EventModel>> event_models;
};

// Grammar, loosest to tightest: <-> | -> (right-assoc) | `|` | & | unary.
// Unary operators are ~, <term>, [term], [!map] and [model.event]; atoms
// match [a-zA-Z][a-zA-Z0-9_]*. In terms, * binds tighter than +.
// & , -> and <-> desugar during parsing. Throws ParseError with the
// offending offset; dynamic references must resolve in `env`.
Formula parse_formula(std::string_view text, const Environment& env = {});

Term parse_term(std::string_view text);

}  // namespace lcdk
