#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lcdk/event_model.hpp"  // ValidationReport
#include "lcdk/relation.hpp"
#include "lcdk/term.hpp"

namespace lcdk {

// Finite Kripke model with one stored relation per atomic term. Derived
// relations for compound terms are always computed (relation_of), never
// stored. S5 mode expects equivalence relations, S4 mode preorders; the
// validator reports violations instead of fixing them.
struct Model {
  enum class Mode { S5, S4 };

  Mode mode = Mode::S5;
  std::vector<std::string> states;
  std::vector<std::string> signature;      // atomic-term names
  std::map<std::string, Relation> atomic;  // one entry per signature atom
  std::map<std::string, Bits> valuation;   // proposition -> state set

  std::size_t size() const noexcept { return states.size(); }
  std::optional<std::size_t> state_index(std::string_view state) const;

  bool operator==(const Model& o) const = default;
};

const char* to_string(Model::Mode mode);

ValidationReport validate_model(const Model& m);

enum class DetectedMode { S5, S4, Irregular };
const char* to_string(DetectedMode mode);

// Strongest mode the stored relations actually satisfy.
DetectedMode detect_mode(const Model& m);

// Per-evaluation-session memo for derived relations, keyed by the
// flattened term. Not synchronized; use one per thread/session.
class RelationCache {
public:
  const Relation* find(const std::string& key) const {
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : &it->second;
  }
  void put(std::string key, Relation r) { map_.emplace(std::move(key), std::move(r)); }

private:
  std::unordered_map<std::string, Relation> map_;
};

// Relation classes a derived relation is expected to stay inside,
// checked with assert in debug builds.
enum class RelationClass { Any, Preorder, Equivalence };

// Computes the relation of `t` over any atomic relation family:
// meet is intersection, join is the reflexive-transitive closure of the
// union. Throws SignatureError for atoms without a stored relation.
Relation derived_relation(const std::map<std::string, Relation>& atomic, const Term& t,
                          RelationCache* cache = nullptr,
                          RelationClass expect = RelationClass::Any);

Relation relation_of(const Model& m, const Term& t, RelationCache* cache = nullptr);
Relation relation_of(const EventModel& em, const Term& t, RelationCache* cache = nullptr);

// Deterministic model sampler: per-atom random partitions in S5 mode,
// reflexive-transitive closures of random edge sets in S4 mode, and a
// random valuation over the proposition pool {p, q, r}.
Model random_model(std::uint64_t seed, std::size_t n_states,
                   const std::vector<std::string>& signature, Model::Mode mode);

}  // namespace lcdk
