#include "hypergames/json_io.hpp"

#include <fstream>
#include <set>

#include "hypergames/errors.hpp"

namespace hypergames {

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key))
      throw model_error(where + ": unknown key '" + key + "'");
  }
}

const json& need(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw model_error(where + ": missing key '" + key + "'");
  return obj.at(key);
}

std::string need_string(const json& obj, const std::string& key, const std::string& where) {
  const json& v = need(obj, key, where);
  if (!v.is_string()) throw model_error(where + ": key '" + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw model_error(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw model_error(where + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

Arena arena_from_json(const json& doc) {
  const std::string where = "arena document";
  if (!doc.is_object()) throw model_error(where + ": not a JSON object");
  reject_unknown_keys(doc, {"states", "actions", "transitions", "ap", "labels", "initial"},
                      where);

  ArenaBuilder b;
  b.set_ap(string_list(need(doc, "ap", where), where + ".ap"));
  for (const auto& st : need(doc, "states", where)) {
    reject_unknown_keys(st, {"id", "owner"}, where + ".states[]");
    b.add_state(need_string(st, "id", where + ".states[]"),
                player_from_string(need_string(st, "owner", where + ".states[]")));
  }
  for (const auto& ac : need(doc, "actions", where)) {
    reject_unknown_keys(ac, {"id", "owner"}, where + ".actions[]");
    b.add_action(need_string(ac, "id", where + ".actions[]"),
                 player_from_string(need_string(ac, "owner", where + ".actions[]")));
  }
  for (const auto& tr : need(doc, "transitions", where)) {
    reject_unknown_keys(tr, {"from", "action", "to"}, where + ".transitions[]");
    b.add_transition(need_string(tr, "from", where + ".transitions[]"),
                     need_string(tr, "action", where + ".transitions[]"),
                     need_string(tr, "to", where + ".transitions[]"));
  }
  const json& labels = need(doc, "labels", where);
  if (!labels.is_object()) throw model_error(where + ".labels: not a JSON object");
  for (const auto& [perspective, table] : labels.items()) {
    if (!table.is_object())
      throw model_error(where + ".labels." + perspective + ": not a JSON object");
    for (const auto& [state, props] : table.items())
      b.set_label(perspective, state,
                  string_list(props, where + ".labels." + perspective + "." + state));
  }
  b.set_initial(need_string(doc, "initial", where));

  Arena arena = b.build_unchecked();
  auto report = validate_arena(arena);
  if (!report.empty()) {
    std::string msg = where + ": invalid arena:";
    for (const auto& r : report) msg += "\n  - " + r;
    throw model_error(msg);
  }
  return arena;
}

json arena_to_json(const Arena& arena) {
  json doc;
  doc["ap"] = arena.ap();
  doc["states"] = json::array();
  for (const auto& st : arena.states())
    doc["states"].push_back({{"id", st.id}, {"owner", to_string(st.owner)}});
  doc["actions"] = json::array();
  for (const auto& ac : arena.actions())
    doc["actions"].push_back({{"id", ac.id}, {"owner", to_string(ac.owner)}});
  doc["transitions"] = json::array();
  for (int s = 0; s < arena.state_count(); ++s)
    for (const auto& [a, t] : arena.enabled(s))
      doc["transitions"].push_back({{"from", arena.states()[s].id},
                                    {"action", arena.actions()[a].id},
                                    {"to", arena.states()[t].id}});
  doc["labels"] = json::object();
  for (const auto& perspective : arena.perspectives()) {
    json table = json::object();
    for (int s = 0; s < arena.state_count(); ++s) {
      auto props = arena.label_of(s, perspective);
      if (!props.empty()) table[arena.states()[s].id] = props;
    }
    doc["labels"][perspective] = std::move(table);
  }
  doc["initial"] = arena.states()[arena.initial()].id;
  return doc;
}

Dfa dfa_from_json(const json& doc) {
  const std::string where = "dfa document";
  if (!doc.is_object()) throw model_error(where + ": not a JSON object");
  reject_unknown_keys(doc, {"ap", "states", "initial", "finals", "transitions"}, where);

  Dfa dfa;
  dfa.ap = string_list(need(doc, "ap", where), where + ".ap");
  check_ap_list(dfa.ap, where + ".ap");
  auto states = string_list(need(doc, "states", where), where + ".states");
  if (states.empty()) throw model_error(where + ".states: empty");
  std::unordered_map<std::string, int> idx;
  for (size_t i = 0; i < states.size(); ++i) {
    if (idx.count(states[i]))
      throw model_error(where + ".states: duplicate state '" + states[i] + "'");
    idx[states[i]] = static_cast<int>(i);
  }
  dfa.state_name = states;
  dfa.accepting.assign(states.size(), 0);
  for (const auto& name : string_list(need(doc, "finals", where), where + ".finals")) {
    auto it = idx.find(name);
    if (it == idx.end()) throw model_error(where + ".finals: unknown state '" + name + "'");
    dfa.accepting[it->second] = 1;
  }
  {
    std::string init = need_string(doc, "initial", where);
    auto it = idx.find(init);
    if (it == idx.end()) throw model_error(where + ".initial: unknown state '" + init + "'");
    dfa.initial = it->second;
  }
  const int letters = dfa.letter_count();
  dfa.delta.assign(states.size(), std::vector<int>(letters, -1));
  for (const auto& tr : need(doc, "transitions", where)) {
    reject_unknown_keys(tr, {"from", "letter", "to"}, where + ".transitions[]");
    auto from = idx.find(need_string(tr, "from", where + ".transitions[]"));
    auto to = idx.find(need_string(tr, "to", where + ".transitions[]"));
    if (from == idx.end() || to == idx.end())
      throw model_error(where + ".transitions[]: unknown state");
    unsigned letter =
        dfa.letter_of(string_list(need(tr, "letter", where + ".transitions[]"),
                                  where + ".transitions[].letter"));
    int& cell = dfa.delta[from->second][letter];
    if (cell != -1)
      throw model_error(where + ".transitions[]: duplicate transition from '" + from->first +
                        "' under the same letter");
    cell = to->second;
  }
  for (size_t q = 0; q < states.size(); ++q)
    for (int letter = 0; letter < letters; ++letter) {
      if (dfa.delta[q][letter] == -1)
        throw model_error(where + ": transition table is not total (state '" + states[q] +
                          "' misses a letter)");
      if (dfa.accepting[q] && !dfa.accepting[dfa.delta[q][letter]])
        throw model_error(where + ": final state '" + states[q] +
                          "' is not absorbing (acceptance is first-visit)");
    }
  return dfa;
}

json dfa_to_json(const Dfa& dfa) {
  json doc;
  doc["ap"] = dfa.ap;
  doc["states"] = dfa.state_name;
  doc["initial"] = dfa.state_name[dfa.initial];
  doc["finals"] = json::array();
  for (int q = 0; q < dfa.state_count(); ++q)
    if (dfa.accepting[q]) doc["finals"].push_back(dfa.state_name[q]);
  doc["transitions"] = json::array();
  for (int q = 0; q < dfa.state_count(); ++q)
    for (int letter = 0; letter < dfa.letter_count(); ++letter)
      doc["transitions"].push_back({{"from", dfa.state_name[q]},
                                    {"letter", dfa.props_of(static_cast<unsigned>(letter))},
                                    {"to", dfa.state_name[dfa.delta[q][letter]]}});
  return doc;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw model_error("load_json_file: cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw model_error("load_json_file: '" + path + "': " + e.what());
  }
}

void save_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw model_error("save_json_file: cannot open '" + path + "'");
  out << doc.dump(2) << "\n";
}

Arena load_arena_file(const std::string& path) { return arena_from_json(load_json_file(path)); }

Dfa load_dfa_file(const std::string& path) { return dfa_from_json(load_json_file(path)); }

}  // namespace hypergames
