#ifndef HYPERGAMES_GAME_GRAPH_HPP
#define HYPERGAMES_GAME_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

namespace hypergames {

// P1 is the defender (square states), P2 the attacker (circle states).
enum class Player { P1, P2 };

inline Player opponent(Player p) { return p == Player::P1 ? Player::P2 : Player::P1; }

std::string to_string(Player p);
Player player_from_string(const std::string& s);  // accepts P1/P2/defender/attacker

// Explicit turn-based deterministic game graph: the common shape the solver
// works on. Edges of a state are sorted by action id and deterministic per
// (state, action). Every state has at least one edge.
struct GameGraph {
  std::vector<Player> owner;
  std::vector<std::vector<std::pair<int, int>>> edges;  // state -> (action, successor)
  std::vector<std::string> action_name;
  std::vector<std::string> state_name;
  int initial = 0;

  int state_count() const { return static_cast<int>(owner.size()); }

  // Successor under an action, -1 when the action is not enabled.
  int successor(int s, int action) const {
    for (const auto& [a, t] : edges[s])
      if (a == action) return t;
    return -1;
  }
};

}  // namespace hypergames

#endif
