#ifndef HYPERGAMES_DYNAMIC_HPP
#define HYPERGAMES_DYNAMIC_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypergames/arena.hpp"
#include "hypergames/dfa.hpp"
#include "hypergames/netmodel.hpp"
#include "hypergames/product.hpp"
#include "hypergames/solver.hpp"

namespace hypergames {

// The attacker's labeling as it evolves across rounds. Every arena state sits
// at a site (a host, a node); decoy_sites are the sites that truly carry a
// decoy. Once the attacker has burned herself on the sites in D, her labeling
// L_D is the decoy-blind base plus the decoy bit at already-discovered sites;
// discovering everything reproduces the true labeling, which is how the
// family is validated.
struct LabelingFamily {
  const Arena* arena = nullptr;
  std::vector<int> site;        // per arena state
  std::vector<int> decoy_sites; // sorted, unique
  int decoy_prop = -1;          // index of "decoy" in arena ap order
  std::vector<uint32_t> base;   // per-state decoy-blind masks

  // D is a bitmask over decoy_sites positions.
  uint32_t label_bits(int s, uint32_t dmask) const;
  uint32_t full_dmask() const { return (uint32_t{1} << decoy_sites.size()) - 1; }
  int site_position(int site_id) const;  // -1 when not a decoy site
  std::string dmask_name(uint32_t dmask) const;  // "{}", "{2}", "{2,4}"
};

// Checks that the arena labels "decoy" somewhere in its true view and nowhere
// in the attacker view, that sites cover every state, and that discovering all
// decoy sites reproduces the true labeling exactly.
LabelingFamily make_labeling_family(const Arena& arena, std::vector<int> site,
                                    std::vector<int> decoy_sites);
LabelingFamily labeling_family_of(const CompiledNetwork& net);

// Attacker rationality filter for one round: the perceived product under L_D,
// its analysis with the objective's owner as reach player, and the attacker's
// permissive strategy on her side of it. Attacker-owned arena states whose
// (s, q2) pair she perceives as winning are restricted to those actions;
// everything else is unrestricted.
struct RoundFilter {
  std::unique_ptr<ProductGame> product;
  WinningAnalysis analysis;
  std::vector<std::vector<int>> p2_actions;

  // Allowed arena actions at attacker-owned s tracking q2; nullptr = all.
  const std::vector<int>* allowed(int s, int q2) const;
};

RoundFilter make_round_filter(const Arena& arena, const Dfa& dfa, const LabelingFamily& family,
                              Player objective_owner, uint32_t dmask);

// Repeated-play deception game. A state is (arena state, automaton state under
// the true labels, automaton state under L_D, D), plus a restart flag: hitting
// a decoy hands control to the defender's bookkeeping move that restarts the
// arena with the site added to D. Reaching an accepting true-label automaton
// state is the defender's target, checked before any restart triggers, and
// absorbing. The attacker is re-filtered every round against L_D; the defender
// is never filtered, restarts are her own announcement.
class DynGame {
 public:
  struct DState {
    int s, q1, q2;
    uint32_t dmask;
    bool pending;  // decoy hit, restart bookkeeping move due
  };

  const Arena& arena() const { return *arena_; }
  const Dfa& dfa() const { return *dfa_; }
  const LabelingFamily& family() const { return *family_; }
  Player objective_owner() const { return owner_; }
  int max_discoveries() const { return max_discoveries_; }

  const std::vector<DState>& states() const { return states_; }
  const GameGraph& graph() const { return graph_; }
  const std::vector<char>& target() const { return target_; }
  int initial() const { return initial_; }
  int hold_action() const { return hold_action_; }
  int restart_action() const { return restart_action_; }

  int state_count() const { return static_cast<int>(states_.size()); }
  int find_state(int s, int q1, int q2, uint32_t dmask, bool pending) const;

  // Lazily built and cached per distinct D.
  const RoundFilter& round_filter(uint32_t dmask) const;

  friend DynGame build_dynamic_hypergame(const Arena&, const Dfa&, const LabelingFamily&,
                                         Player, int, std::size_t);

 private:
  const Arena* arena_ = nullptr;
  const Dfa* dfa_ = nullptr;
  const LabelingFamily* family_ = nullptr;
  Player owner_ = Player::P1;
  int max_discoveries_ = 0;

  std::vector<DState> states_;
  std::unordered_map<std::string, int> index_;
  GameGraph graph_;
  std::vector<char> target_;
  int initial_ = -1;
  int hold_action_ = -1;
  int restart_action_ = -1;
  mutable std::map<uint32_t, RoundFilter> filters_;
};

// max_discoveries bounds |D|: a restart that would need a larger D parks the
// play in an absorbing non-target state instead. -1 means |decoy_sites|, the
// natural saturation, which never parks anything.
DynGame build_dynamic_hypergame(const Arena& arena, const Dfa& dfa, const LabelingFamily& family,
                                Player objective_owner, int max_discoveries = -1,
                                std::size_t cap = 2000000);

struct DynSolution {
  std::vector<char> region;  // per DynGame state
  std::vector<int> rank;
  PositionalStrategy strategy;
};

// Defender attractor to the target across rounds.
DynSolution solve_repeated(const DynGame& game);

}  // namespace hypergames

#endif
