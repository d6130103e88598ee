#ifndef HYPERGAMES_DOT_HPP
#define HYPERGAMES_DOT_HPP

#include <string>

#include "hypergames/arena.hpp"
#include "hypergames/dfa.hpp"
#include "hypergames/hypergame.hpp"
#include "hypergames/product.hpp"
#include "hypergames/solver.hpp"

namespace hypergames {

// Drawing conventions shared by all exports: attacker (P2) states are
// circles, defender (P1) states are boxes, accepting/final states get a
// double border, strategy moves are dashed red edges, and states whose two
// automaton components disagree (revealed-to-the-defender misperception) are
// shaded.

std::string arena_to_dot(const Arena& arena, const std::string& perspective);

std::string dfa_to_dot(const Dfa& dfa);

std::string product_to_dot(const ProductGame& pg, const PositionalStrategy* strategy = nullptr);

std::string hypergame_to_dot(const Hypergame& hg, const PositionalStrategy* strategy = nullptr);

}  // namespace hypergames

#endif
