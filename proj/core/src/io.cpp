#include "lcdk/io.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "lcdk/errors.hpp"

namespace lcdk {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(what + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t state_index_or_throw(const Model& m, const std::string& name,
                                 const std::string& where) {
  auto idx = m.state_index(name);
  if (!idx) throw Error(where + ": unknown state '" + name + "'");
  return *idx;
}

Relation relation_from_pairs(const Model& m, const json& pairs, const std::string& where) {
  Relation rel(m.size());
  if (!pairs.is_array()) throw Error(where + ": expected an array of state pairs");
  for (const auto& pair : pairs) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw Error(where + ": each entry must be a pair of state names");
    rel.set(state_index_or_throw(m, pair[0].get<std::string>(), where),
            state_index_or_throw(m, pair[1].get<std::string>(), where));
  }
  return rel;
}

Relation relation_from_blocks(const Model& m, const json& blocks, const std::string& where) {
  std::vector<int> block(m.size(), -1);
  if (!blocks.is_array()) throw Error(where + ": 'blocks' must be an array of state lists");
  int id = 0;
  for (const auto& group : blocks) {
    if (!group.is_array()) throw Error(where + ": each block must be a list of states");
    for (const auto& state : group) {
      if (!state.is_string()) throw Error(where + ": block entries must be state names");
      std::size_t i = state_index_or_throw(m, state.get<std::string>(), where);
      if (block[i] != -1)
        throw Error(where + ": state '" + state.get<std::string>() + "' is in two blocks");
      block[i] = id;
    }
    ++id;
  }
  // Unmentioned states form singleton blocks.
  for (auto& b : block)
    if (b == -1) b = id++;

  Relation rel(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (block[i] == block[j]) rel.set(i, j);
  return rel;
}

}  // namespace

Model parse_model_json(const std::string& text) {
  json j = parse_json(text, "model");
  if (!j.is_object()) throw Error("model: expected a JSON object");

  Model m;
  std::string mode = j.value("mode", "S5");
  if (mode == "S5")
    m.mode = Model::Mode::S5;
  else if (mode == "S4")
    m.mode = Model::Mode::S4;
  else
    throw Error("model: mode must be \"S5\" or \"S4\", got \"" + mode + "\"");

  if (!j.contains("states") || !j["states"].is_array())
    throw Error("model: missing 'states' array");
  for (const auto& s : j["states"]) {
    if (!s.is_string()) throw Error("model: state names must be strings");
    m.states.push_back(s.get<std::string>());
  }

  if (!j.contains("atoms") || !j["atoms"].is_object())
    throw Error("model: missing 'atoms' object");
  for (const auto& [atom, given] : j["atoms"].items()) {
    m.signature.push_back(atom);
    std::string where = "model atom '" + atom + "'";
    if (given.is_object() && given.contains("blocks")) {
      if (m.mode != Model::Mode::S5)
        throw Error(where + ": partition blocks are only accepted in S5 mode");
      m.atomic.emplace(atom, relation_from_blocks(m, given["blocks"], where));
    } else {
      m.atomic.emplace(atom, relation_from_pairs(m, given, where));
    }
  }

  if (j.contains("valuation")) {
    if (!j["valuation"].is_object()) throw Error("model: 'valuation' must be an object");
    for (const auto& [prop, states] : j["valuation"].items()) {
      Bits set(m.size());
      if (!states.is_array()) throw Error("model valuation '" + prop + "': expected an array");
      for (const auto& s : states) {
        if (!s.is_string()) throw Error("model valuation '" + prop + "': state names must be strings");
        set.set(state_index_or_throw(m, s.get<std::string>(), "valuation '" + prop + "'"));
      }
      m.valuation.emplace(prop, std::move(set));
    }
  }
  return m;
}

Model load_model_file(const std::string& path) {
  try {
    return parse_model_json(read_file(path));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

std::string model_to_json_string(const Model& m, int indent) {
  json j;
  j["mode"] = to_string(m.mode);
  j["states"] = m.states;
  json atoms = json::object();
  for (const auto& [atom, rel] : m.atomic) {
    json pairs = json::array();
    for (const auto& [i, k] : rel.pairs())
      pairs.push_back(json::array({m.states[i], m.states[k]}));
    atoms[atom] = std::move(pairs);
  }
  j["atoms"] = std::move(atoms);
  json valuation = json::object();
  for (const auto& [prop, set] : m.valuation) {
    json states = json::array();
    for (std::size_t i : set.members()) states.push_back(m.states[i]);
    valuation[prop] = std::move(states);
  }
  j["valuation"] = std::move(valuation);
  return j.dump(indent);
}

void save_model_file(const Model& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << model_to_json_string(m) << "\n";
}

ReadingMap parse_reading_map_json(const std::string& text) {
  json j = parse_json(text, "reading map");
  if (!j.is_object() || !j.contains("map") || !j["map"].is_object())
    throw Error("reading map: expected an object with a 'map' field");
  std::string name = j.value("name", "");
  std::map<std::string, Term> assignment;
  for (const auto& [atom, term_text] : j["map"].items()) {
    if (!term_text.is_string())
      throw Error("reading map '" + name + "': targets must be term strings");
    assignment.emplace(atom, parse_term(term_text.get<std::string>()));
  }
  return ReadingMap(std::move(name), std::move(assignment));
}

ReadingMap load_reading_map_file(const std::string& path) {
  try {
    return parse_reading_map_json(read_file(path));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

EventModel parse_event_model_json(const std::string& text) {
  json j = parse_json(text, "event model");
  if (!j.is_object() || !j.contains("events") || !j["events"].is_array())
    throw Error("event model: expected an object with an 'events' array");

  EventModel em;
  em.name = j.value("name", "");
  for (const auto& e : j["events"]) {
    if (!e.is_string()) throw Error("event model: event names must be strings");
    em.events.push_back(e.get<std::string>());
  }

  auto event_index_or_throw = [&em](const std::string& name, const std::string& where) {
    auto idx = em.event_index(name);
    if (!idx) throw Error(where + ": unknown event '" + name + "'");
    return *idx;
  };

  if (j.contains("reading")) {
    if (!j["reading"].is_object()) throw Error("event model: 'reading' must be an object");
    for (const auto& [event, map] : j["reading"].items()) {
      event_index_or_throw(event, "event model reading");
      if (!map.is_object())
        throw Error("event model reading '" + event + "': expected an atom->term object");
      std::map<std::string, Term> assignment;
      for (const auto& [atom, term_text] : map.items()) {
        if (!term_text.is_string())
          throw Error("event model reading '" + event + "': targets must be term strings");
        assignment.emplace(atom, parse_term(term_text.get<std::string>()));
      }
      em.reading.emplace(event, ReadingMap(em.name + ":" + event, std::move(assignment)));
    }
  }

  if (!j.contains("atoms") || !j["atoms"].is_object())
    throw Error("event model: missing 'atoms' object");
  for (const auto& [atom, pairs] : j["atoms"].items()) {
    std::string where = "event model atom '" + atom + "'";
    Relation rel(em.size());
    if (!pairs.is_array()) throw Error(where + ": expected an array of event pairs");
    for (const auto& pair : pairs) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
        throw Error(where + ": each entry must be a pair of event names");
      rel.set(event_index_or_throw(pair[0].get<std::string>(), where),
              event_index_or_throw(pair[1].get<std::string>(), where));
    }
    em.atomic.emplace(atom, std::move(rel));
  }
  return em;
}

EventModel load_event_model_file(const std::string& path) {
  try {
    return parse_event_model_json(read_file(path));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

Environment load_environment(const std::vector<std::string>& paths) {
  Environment env;
  for (const auto& path : paths) {
    json j = parse_json(read_file(path), path);
    if (j.is_object() && j.contains("events")) {
      auto em = std::make_shared<EventModel>(load_event_model_file(path));
      if (em->name.empty()) throw Error(path + ": event model needs a 'name' to be referenced");
      env.event_models[em->name] = std::move(em);
    } else if (j.is_object() && j.contains("map")) {
      auto rm = std::make_shared<ReadingMap>(load_reading_map_file(path));
      if (rm->name().empty()) throw Error(path + ": reading map needs a 'name' to be referenced");
      env.reading_maps[rm->name()] = std::move(rm);
    } else {
      throw Error(path + ": neither a reading map ('map') nor an event model ('events')");
    }
  }
  return env;
}

}  // namespace lcdk
