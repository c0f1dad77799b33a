#include "lcdk/event_model.hpp"

#include <algorithm>
#include <set>

namespace lcdk {

std::optional<std::size_t> EventModel::event_index(std::string_view event) const {
  for (std::size_t i = 0; i < events.size(); ++i)
    if (events[i] == event) return i;
  return std::nullopt;
}

const ReadingMap& EventModel::reading_for(const std::string& event) const {
  static const ReadingMap kIdentity;
  auto it = reading.find(event);
  return it == reading.end() ? kIdentity : it->second;
}

std::vector<std::string> EventModel::signature() const {
  std::vector<std::string> out;
  out.reserve(atomic.size());
  for (const auto& [atom, rel] : atomic) out.push_back(atom);
  return out;
}

ValidationReport validate_event_model(const EventModel& em) {
  ValidationReport report;
  auto issue = [&report](std::string msg) { report.issues.push_back(std::move(msg)); };

  if (em.events.empty()) issue("event model has no events");

  std::set<std::string> seen;
  for (const auto& e : em.events)
    if (!seen.insert(e).second) issue("duplicate event name '" + e + "'");

  for (const auto& [e, rm] : em.reading)
    if (!em.event_index(e)) issue("reading map given for unknown event '" + e + "'");

  for (const auto& [atom, rel] : em.atomic) {
    if (rel.size() != em.events.size()) {
      issue("relation for atom '" + atom + "' has dimension " + std::to_string(rel.size()) +
            ", expected " + std::to_string(em.events.size()));
      continue;
    }
    for (std::size_t i = 0; i < rel.size(); ++i)
      if (!rel.at(i, i)) issue("atom '" + atom + "': not reflexive at event '" + em.events[i] + "'");
    for (std::size_t i = 0; i < rel.size(); ++i)
      for (std::size_t j = i + 1; j < rel.size(); ++j)
        if (rel.at(i, j) != rel.at(j, i))
          issue("atom '" + atom + "': not symmetric on ('" + em.events[i] + "','" + em.events[j] + "')");
    for (std::size_t i = 0; i < rel.size(); ++i)
      for (std::size_t j = 0; j < rel.size(); ++j)
        for (std::size_t k = 0; k < rel.size(); ++k)
          if (rel.at(i, j) && rel.at(j, k) && !rel.at(i, k))
            issue("atom '" + atom + "': not transitive via ('" + em.events[i] + "','" +
                  em.events[j] + "','" + em.events[k] + "')");

    // Related events must read equivalent terms for the atom.
    for (std::size_t i = 0; i < rel.size(); ++i)
      for (std::size_t j = i + 1; j < rel.size(); ++j) {
        if (!rel.at(i, j)) continue;
        Term ti = em.reading_for(em.events[i]).read(atom);
        Term tj = em.reading_for(em.events[j]).read(atom);
        if (!term_equiv(ti, tj))
          issue("atom '" + atom + "': events '" + em.events[i] + "' and '" + em.events[j] +
                "' are related but read inequivalent terms " + to_string(ti) + " and " +
                to_string(tj));
      }
  }
  return report;
}

}  // namespace lcdk
