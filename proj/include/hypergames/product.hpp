#ifndef HYPERGAMES_PRODUCT_HPP
#define HYPERGAMES_PRODUCT_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hypergames/arena.hpp"
#include "hypergames/dfa.hpp"
#include "hypergames/game_graph.hpp"

namespace hypergames {

// Synchronous composition of an arena and an objective automaton under one
// labeling perspective. The automaton consumes the label of the *destination*
// of each move, and the initial automaton state already consumed the label of
// the initial arena state. A product state is final when its automaton
// component accepts, and finality is absorbing because the automaton's
// accepting states are.
struct ProductGame {
  const Arena* arena = nullptr;
  const Dfa* dfa = nullptr;
  std::string perspective;

  // When true, states enumerate all (s,q) pairs with index s * |Q| + q, so
  // region analyses downstream are total; otherwise only reachable pairs
  // exist, in discovery order.
  bool full = false;

  std::vector<std::pair<int, int>> state_sq;  // product index -> (s, q)
  GameGraph graph;
  std::vector<char> final_state;
  int initial = -1;

  int state_count() const { return static_cast<int>(state_sq.size()); }

  // (arena state, automaton state) of a product state.
  std::pair<int, int> project_state(int idx) const { return state_sq[idx]; }

  // Product index of (s,q); -1 when the pair is not a state (reachable mode).
  int index_of(int s, int q) const;

 private:
  friend ProductGame build_product(const Arena&, const Dfa&, const std::string&);
  friend ProductGame build_full_product(const Arena&, const Dfa&, const std::string&);
  friend ProductGame build_full_product(const Arena&, const Dfa&,
                                        const std::function<uint32_t(int)>&,
                                        const std::string&);
  std::vector<int> index_;  // reachable mode: s * |Q| + q -> product index or -1
};

// Reachable product only. The automaton's alphabet must be the arena's
// proposition list (same names, same order); the perspective must exist.
ProductGame build_product(const Arena& arena, const Dfa& dfa, const std::string& perspective);

// Every (s,q) pair, reachable or not, with canonical indexing s * |Q| + q.
ProductGame build_full_product(const Arena& arena, const Dfa& dfa,
                               const std::string& perspective);

// Full product under an arbitrary labeling function (bitmask over arena ap
// order); `name` only decorates state names. Used for evolving labelings.
ProductGame build_full_product(const Arena& arena, const Dfa& dfa,
                               const std::function<uint32_t(int)>& labels,
                               const std::string& name);

}  // namespace hypergames

#endif
