#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcdk/reading.hpp"
#include "lcdk/relation.hpp"
#include "lcdk/term.hpp"

namespace lcdk {

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const noexcept { return issues.empty(); }
};

// Reading event model: finitely many events, each carrying a reading
// map, with per-atom equivalence relations over events encoding who is
// uncertain about which reading happened. Events related by R_x must
// read equivalent terms for x.
struct EventModel {
  std::string name;
  std::vector<std::string> events;
  std::map<std::string, ReadingMap> reading;  // by event name; missing = identity
  std::map<std::string, Relation> atomic;     // by atomic term, over event indices

  std::size_t size() const noexcept { return events.size(); }

  std::optional<std::size_t> event_index(std::string_view event) const;

  // Reading map of `event`; an empty (identity) map when none was given.
  const ReadingMap& reading_for(const std::string& event) const;

  // Atomic terms the model constrains, sorted.
  std::vector<std::string> signature() const;
};

// Equivalence-relation and reading-coherence checks, with witnesses.
ValidationReport validate_event_model(const EventModel& em);

}  // namespace lcdk
