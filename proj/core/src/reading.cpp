#include "lcdk/reading.hpp"

namespace lcdk {

std::vector<std::string> lint_reading_map(const ReadingMap& m) {
  std::vector<std::string> warnings;
  for (const auto& [atom, target] : m.assignment()) {
    if (!term_leq(target, Term::atom(atom))) {
      std::string who = m.name().empty() ? "reading map" : "reading map '" + m.name() + "'";
      warnings.push_back(who + ": " + atom + " -> " + to_string(target) +
                         " is not below " + atom +
                         " (the agent does not re-read its own knowledge base)");
    }
  }
  return warnings;
}

}  // namespace lcdk
