#ifndef HYPERGAMES_HYPERGAME_HPP
#define HYPERGAMES_HYPERGAME_HPP

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypergames/product.hpp"
#include "hypergames/solver.hpp"

namespace hypergames {

// State classes of one objective viewed through two labelings, over all (s,q)
// pairs of the shared automaton:
//   defender_sure         : the defender truly wins (Win1)
//   misperceived_losing   : the attacker truly wins but perceives losing
//   perceived_and_winning : the attacker truly wins and perceives winning
// The residual class is empty by determinacy of the perceived game; it is
// still computed so the construction can assert it.
struct PerceptionPartition {
  std::vector<char> defender_sure;
  std::vector<char> misperceived_losing;
  std::vector<char> perceived_and_winning;
  std::vector<char> residual;
};

// Level-2 game of games: states (s, q, p) where q tracks the objective under
// the true labeling and p under the attacker's labeling. Outside the target,
// a player whose (s, p)-pair lies in her perceived winning region only gets
// the actions of her perceived permissive strategy; everybody else keeps all
// arena actions. Target states — (s,q) already won by the defender — are
// absorbing via a synthetic hold action, because from there the classical
// winning strategy takes over and the extra structure is irrelevant.
class Hypergame {
 public:
  struct TState {
    int s, q, p;
  };

  Player objective_owner() const { return owner_; }
  const ProductGame& true_product() const { return *g1_; }
  const ProductGame& perceived_product() const { return *g2_; }

  const std::vector<TState>& states() const { return states_; }
  const GameGraph& graph() const { return graph_; }
  const std::vector<char>& target() const { return target_; }
  const std::vector<char>& divergence() const { return divergence_; }
  int initial() const { return initial_; }
  int hold_action() const { return hold_action_; }

  int state_count() const { return static_cast<int>(states_.size()); }
  int find_state(int s, int q, int p) const;  // -1 when unreachable

  // (s,q) classification copied from the two analyses, indexed s * |Q| + q.
  bool in_win1(int s, int q) const { return win1_[flat(s, q)] != 0; }
  bool in_win2(int s, int q) const { return win2_[flat(s, q)] != 0; }
  bool in_win1_perceived(int s, int p) const { return win1_p2_[flat(s, p)] != 0; }
  bool in_win2_perceived(int s, int p) const { return win2_p2_[flat(s, p)] != 0; }

  // Perceived permissive sets (arena action ids), keyed by (s,p).
  const std::vector<int>& perceived_p1_actions(int s, int p) const;
  const std::vector<int>& perceived_p2_actions(int s, int p) const;

  friend Hypergame build_hypergame(const ProductGame&, const ProductGame&,
                                   const WinningAnalysis&, const WinningAnalysis&, Player);

 private:
  int flat(int s, int q) const { return s * nq_ + q; }

  Player owner_ = Player::P1;
  const ProductGame* g1_ = nullptr;
  const ProductGame* g2_ = nullptr;
  int nq_ = 0;

  std::vector<char> win1_, win2_, win1_p2_, win2_p2_;
  std::vector<std::vector<int>> pi1_p2_, pi2_p2_;

  std::vector<TState> states_;
  std::unordered_map<long long, int> index_;
  GameGraph graph_;
  std::vector<char> target_;
  std::vector<char> divergence_;
  int initial_ = -1;
  int hold_action_ = -1;
};

// g1: full product under the true labeling; g2: full product under the
// attacker's labeling; a1/a2: the winning analyses of g1/g2 with the
// objective's owner as reach player. The two products must share the arena
// and automaton.
Hypergame build_hypergame(const ProductGame& g1, const ProductGame& g2,
                          const WinningAnalysis& a1, const WinningAnalysis& a2,
                          Player objective_owner);

struct DeceptionResult {
  std::vector<char> region;      // per hypergame state
  std::vector<int> rank;
  PositionalStrategy strategy;   // defender moves on region minus target
};

// Defender attractor to the target under the perception-filtered dynamics.
DeceptionResult deceptive_sure_winning(const Hypergame& hg);

// Re-derives, for every defender-owned state of the region where the attacker
// truly wins but perceives the defender winning, that the strategy's move is
// one the attacker considers rational for the defender — i.e. the play never
// exposes the misperception. Returns human-readable violations (empty unless
// the strategy was corrupted, since the construction only offers such moves).
std::vector<std::string> check_stealthy(const Hypergame& hg, const PositionalStrategy& strategy,
                                        const PerceptionPartition& partition);

// The three named intersections plus the (empty) residual over all (s,q).
PerceptionPartition classify_states(const WinningAnalysis& a1, const WinningAnalysis& a2,
                                    Player objective_owner);

// Whole pipeline on one arena: translate nothing here — the automaton comes in
// ready — build both full products, analyze, build and solve the hypergame.
struct SynthesisResult {
  std::unique_ptr<ProductGame> g1, g2;
  WinningAnalysis a1, a2;
  Hypergame hg;
  DeceptionResult deception;
  PerceptionPartition partition;
  std::vector<std::string> stealth_report;
};

SynthesisResult synthesize_deception(const Arena& arena, const Dfa& dfa, Player objective_owner,
                                     const std::string& true_perspective = "true",
                                     const std::string& attacker_perspective = "P2");

}  // namespace hypergames

#endif
