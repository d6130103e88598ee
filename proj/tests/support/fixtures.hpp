#ifndef TESTS_SUPPORT_FIXTURES_HPP
#define TESTS_SUPPORT_FIXTURES_HPP

#include <string>
#include <vector>

#include "hypergames/arena.hpp"
#include "hypergames/dfa.hpp"

namespace fixtures {

// Absolute path of a file in the repository fixtures directory.
std::string path(const std::string& name);

std::string toy_state(int node, char topo, bool attacker_turn);

// The four-node, two-topology arena (same content as toy_ab.arena.json) with
// a configurable initial state, since several facts need the game started
// mid-walk.
hypergames::Arena toy_arena(const std::string& initial = "(0,A,circle)");

// Node number of every toy arena state, keyed by state index.
std::vector<int> toy_sites(const hypergames::Arena& arena);

// parse + translate in one step
hypergames::Dfa dfa_of(const std::string& formula, const std::vector<std::string>& ap);

}  // namespace fixtures

#endif
