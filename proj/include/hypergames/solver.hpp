#ifndef HYPERGAMES_SOLVER_HPP
#define HYPERGAMES_SOLVER_HPP

#include <utility>
#include <vector>

#include "hypergames/game_graph.hpp"

namespace hypergames {

// The two game-solving modes compute identical results; the worklist is the
// O(|transitions|) one, the naive full-scan iteration exists as a correctness
// cross-check.
enum class AttractorMode { worklist, naive };

struct AttractorResult {
  std::vector<char> in_region;  // per state
  std::vector<int> rank;        // wave of entry; 0 on targets; -1 outside
};

// Least fixed point of
//   X |-> X  u  {player-owned s   : some enabled action leads into X}
//          u  {opponent-owned s : every enabled action leads into X}
// seeded with `target`.
AttractorResult attractor(const GameGraph& g, Player player, const std::vector<char>& target,
                          AttractorMode mode = AttractorMode::worklist);

// Determinacy partition: one player's reachability region and its complement,
// the opponent's safety region.
struct WinningAnalysis {
  Player reach_player = Player::P1;
  std::vector<char> win_reach;
  std::vector<char> win_safe;
  std::vector<int> rank;      // defined on win_reach
  std::vector<char> target;
};

WinningAnalysis sure_winning_regions(const GameGraph& g, Player reach_player,
                                     const std::vector<char>& targets,
                                     AttractorMode mode = AttractorMode::worklist);

// Set-valued strategy: all actions keeping the play inside the given region.
// For the reach player the region is win_reach and target states allow every
// enabled action (the play is already won; the region counts as absorbing
// there); for the safe player the region is win_safe. States outside the
// strategy's region, or owned by the other player, get an empty set.
std::vector<std::vector<int>> permissive_strategy(const GameGraph& g,
                                                  const WinningAnalysis& analysis,
                                                  Player player);

// Single-action refinement. The reach player minimizes the successor rank
// (ties: smallest action id) on win_reach minus targets; the safe player takes
// the smallest-id action staying in win_safe. -1 where undefined.
struct PositionalStrategy {
  std::vector<int> action;
  bool defined_at(int s) const { return action[s] >= 0; }
};

PositionalStrategy positional_strategy(const GameGraph& g, const WinningAnalysis& analysis,
                                       Player player);

}  // namespace hypergames

#endif
