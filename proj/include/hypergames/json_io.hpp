#ifndef HYPERGAMES_JSON_IO_HPP
#define HYPERGAMES_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "hypergames/arena.hpp"
#include "hypergames/dfa.hpp"

namespace hypergames {

using nlohmann::json;

// Document schemas are strict: unknown keys are rejected so typos cannot
// silently change a model.

// {states:[{id,owner}], actions:[{id,owner}], transitions:[{from,action,to}],
//  ap:[...], labels:{perspective:{state:[props]}}, initial}
// States missing from a labels map carry the empty label set.
Arena arena_from_json(const json& doc);
json arena_to_json(const Arena& arena);

// {ap, states, initial, finals, transitions:[{from, letter:[props], to}]}
// The transition list must be total (every state and letter exactly once) and
// final states must be absorbing.
Dfa dfa_from_json(const json& doc);
json dfa_to_json(const Dfa& dfa);

// File wrappers; parse and read failures raise model_error with the path.
json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& doc);
Arena load_arena_file(const std::string& path);
Dfa load_dfa_file(const std::string& path);

}  // namespace hypergames

#endif
