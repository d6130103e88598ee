#ifndef TESTS_SUPPORT_RANDOM_GEN_HPP
#define TESTS_SUPPORT_RANDOM_GEN_HPP

#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypergames/arena.hpp"
#include "hypergames/dfa.hpp"
#include "hypergames/formula.hpp"

namespace testgen {

// All generators are deterministic functions of the engine state, so a seed
// pins the whole test case.

int below(std::mt19937_64& rng, int n);
bool chance(std::mt19937_64& rng, double p);

// Random normalized co-safe formula over the given atoms, at most `budget`
// syntax nodes before normalization.
hypergames::FormulaPtr random_formula(std::mt19937_64& rng,
                                      const std::vector<std::string>& ap, int budget);

// Random valid arena whose two perspectives ("true", "P2") carry identical
// labels over p0..p{n_props-1}.
hypergames::Arena random_symmetric_arena(std::mt19937_64& rng, int max_states, int n_props);

// Random valid arena with a "decoy" proposition the attacker's perspective
// never sees; site i of decoy_states carries it in the true view.
struct DecoyArena {
  hypergames::Arena arena;
  std::vector<int> site;        // identity: state index
  std::vector<int> decoy_sites;
};
DecoyArena random_decoy_arena(std::mt19937_64& rng, int max_states, int n_props);

// Random explicit automaton over the alphabet of `ap`: total, absorbing
// accepting states.
hypergames::Dfa random_dfa(std::mt19937_64& rng, const std::vector<std::string>& ap,
                           int max_states);

// Random loadable network document with at least one decoy host.
nlohmann::json random_network(std::mt19937_64& rng);

std::vector<unsigned> random_word(std::mt19937_64& rng, int length, int letters);

}  // namespace testgen

#endif
