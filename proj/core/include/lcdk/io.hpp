#pragma once

#include <string>
#include <vector>

#include "lcdk/event_model.hpp"
#include "lcdk/model.hpp"
#include "lcdk/parser.hpp"
#include "lcdk/reading.hpp"

namespace lcdk {

// JSON file formats. Relations are pair lists and are taken literally —
// no closure is applied on load; the validators reject non-closed input.
// S5 models may alternatively give an atom as {"blocks": [[...],...]};
// states not mentioned in any block form singleton blocks.
//
//   model:        {"mode":"S5","states":["w1",...],
//                  "atoms":{"a":[["w1","w2"],...]},
//                  "valuation":{"p":["w1",...]}}
//   reading map:  {"name":"beta1","map":{"a":"a*(b+c)"}}
//   event model:  {"name":"E1","events":["e","f"],
//                  "reading":{"f":{"a":"a*c"}},
//                  "atoms":{"a":[["e","e"],["f","f"]]}}

Model parse_model_json(const std::string& text);
Model load_model_file(const std::string& path);
std::string model_to_json_string(const Model& m, int indent = 2);
void save_model_file(const Model& m, const std::string& path);

ReadingMap parse_reading_map_json(const std::string& text);
ReadingMap load_reading_map_file(const std::string& path);

EventModel parse_event_model_json(const std::string& text);
EventModel load_event_model_file(const std::string& path);

// Loads a mixed list of reading-map and event-model files (told apart by
// their fields) into a definitions environment.
Environment load_environment(const std::vector<std::string>& paths);

}  // namespace lcdk
