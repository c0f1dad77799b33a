#include "lcdk/model.hpp"

#include <cassert>
#include <random>

#include "lcdk/errors.hpp"

namespace lcdk {

std::optional<std::size_t> Model::state_index(std::string_view state) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == state) return i;
  return std::nullopt;
}

const char* to_string(Model::Mode mode) { return mode == Model::Mode::S5 ? "S5" : "S4"; }

const char* to_string(DetectedMode mode) {
  switch (mode) {
    case DetectedMode::S5: return "S5";
    case DetectedMode::S4: return "S4";
    case DetectedMode::Irregular: return "irregular";
  }
  return "?";
}

ValidationReport validate_model(const Model& m) {
  ValidationReport report;
  auto issue = [&report](std::string msg) { report.issues.push_back(std::move(msg)); };

  for (std::size_t i = 0; i < m.states.size(); ++i)
    for (std::size_t j = i + 1; j < m.states.size(); ++j)
      if (m.states[i] == m.states[j]) issue("duplicate state name '" + m.states[i] + "'");

  for (const auto& atom : m.signature)
    if (!m.atomic.count(atom)) issue("no relation stored for atom '" + atom + "'");
  for (const auto& [atom, rel] : m.atomic) {
    bool known = false;
    for (const auto& s : m.signature) known = known || s == atom;
    if (!known) issue("relation stored for atom '" + atom + "' outside the signature");
  }

  for (const auto& [atom, rel] : m.atomic) {
    if (rel.size() != m.size()) {
      issue("relation for atom '" + atom + "' has dimension " + std::to_string(rel.size()) +
            ", expected " + std::to_string(m.size()));
      continue;
    }
    for (std::size_t i = 0; i < rel.size(); ++i)
      if (!rel.at(i, i)) issue("atom '" + atom + "': not reflexive at state '" + m.states[i] + "'");
    if (m.mode == Model::Mode::S5)
      for (std::size_t i = 0; i < rel.size(); ++i)
        for (std::size_t j = i + 1; j < rel.size(); ++j)
          if (rel.at(i, j) != rel.at(j, i))
            issue("atom '" + atom + "': not symmetric on ('" + m.states[i] + "','" +
                  m.states[j] + "')");
    for (std::size_t i = 0; i < rel.size(); ++i)
      for (std::size_t j = 0; j < rel.size(); ++j)
        for (std::size_t k = 0; k < rel.size(); ++k)
          if (rel.at(i, j) && rel.at(j, k) && !rel.at(i, k))
            issue("atom '" + atom + "': not transitive via ('" + m.states[i] + "','" +
                  m.states[j] + "','" + m.states[k] + "')");
  }

  for (const auto& [prop, set] : m.valuation)
    if (set.size() != m.size())
      issue("valuation for '" + prop + "' has dimension " + std::to_string(set.size()) +
            ", expected " + std::to_string(m.size()));

  return report;
}

DetectedMode detect_mode(const Model& m) {
  bool s5 = true, s4 = true;
  for (const auto& [atom, rel] : m.atomic) {
    if (!rel.is_preorder()) {
      s4 = false;
      s5 = false;
      break;
    }
    if (!rel.symmetric()) s5 = false;
  }
  if (s5) return DetectedMode::S5;
  if (s4) return DetectedMode::S4;
  return DetectedMode::Irregular;
}

Relation derived_relation(const std::map<std::string, Relation>& atomic, const Term& t,
                          RelationCache* cache, RelationClass expect) {
  std::string key;
  if (cache) {
    key = flatten(t).key();
    if (const Relation* hit = cache->find(key)) return *hit;
  }

  Relation result;
  switch (t.kind()) {
    case Term::Kind::Atom: {
      auto it = atomic.find(t.atom_name());
      if (it == atomic.end())
        throw SignatureError("unknown atomic term '" + t.atom_name() + "'");
      result = it->second;
      break;
    }
    case Term::Kind::Meet:
      result = derived_relation(atomic, t.left(), cache, expect) &
               derived_relation(atomic, t.right(), cache, expect);
      break;
    case Term::Kind::Join:
      result = (derived_relation(atomic, t.left(), cache, expect) |
                derived_relation(atomic, t.right(), cache, expect))
                   .rtc();
      break;
  }

  assert(expect != RelationClass::Preorder || result.is_preorder());
  assert(expect != RelationClass::Equivalence || result.is_equivalence());

  if (cache) cache->put(std::move(key), result);
  return result;
}

Relation relation_of(const Model& m, const Term& t, RelationCache* cache) {
  return derived_relation(m.atomic, t, cache,
                          m.mode == Model::Mode::S5 ? RelationClass::Equivalence
                                                    : RelationClass::Preorder);
}

Relation relation_of(const EventModel& em, const Term& t, RelationCache* cache) {
  return derived_relation(em.atomic, t, cache, RelationClass::Equivalence);
}

namespace {

// Random partition as a restricted-growth string over raw engine draws;
// any distribution shift is irrelevant here, determinism is not.
std::vector<std::size_t> random_partition(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> block(n, 0);
  std::size_t max_block = 0;
  for (std::size_t i = 1; i < n; ++i) {
    block[i] = rng() % (max_block + 2);
    if (block[i] > max_block) max_block = block[i];
  }
  return block;
}

Relation partition_to_relation(const std::vector<std::size_t>& block) {
  Relation r(block.size());
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = 0; j < block.size(); ++j)
      if (block[i] == block[j]) r.set(i, j);
  return r;
}

}  // namespace

Model random_model(std::uint64_t seed, std::size_t n_states,
                   const std::vector<std::string>& signature, Model::Mode mode) {
  if (n_states == 0) throw Error("random_model requires at least one state");
  std::mt19937_64 rng(seed);

  Model m;
  m.mode = mode;
  m.signature = signature;
  m.states.reserve(n_states);
  for (std::size_t i = 0; i < n_states; ++i) m.states.push_back("w" + std::to_string(i + 1));

  for (const auto& atom : signature) {
    if (mode == Model::Mode::S5) {
      m.atomic.emplace(atom, partition_to_relation(random_partition(rng, n_states)));
    } else {
      Relation edges(n_states);
      for (std::size_t i = 0; i < n_states; ++i)
        for (std::size_t j = 0; j < n_states; ++j)
          if (i != j && rng() % 10 < 3) edges.set(i, j);
      m.atomic.emplace(atom, edges.rtc());
    }
  }

  for (const char* prop : {"p", "q", "r"}) {
    Bits set(n_states);
    for (std::size_t i = 0; i < n_states; ++i)
      if (rng() & 1) set.set(i);
    m.valuation.emplace(prop, std::move(set));
  }
  return m;
}

}  // namespace lcdk
