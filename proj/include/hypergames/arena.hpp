#ifndef HYPERGAMES_ARENA_HPP
#define HYPERGAMES_ARENA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypergames/game_graph.hpp"

namespace hypergames {

// Two-player turn-based deterministic arena. States and actions carry owner
// tags; a transition is only legal for actions of the owner of its source
// state. Several labeling functions over one proposition list coexist, one
// per perspective (the true one and the attacker's decoy-blind one), which is
// how asymmetric information enters every construction downstream.
//
// Externally states and actions are opaque strings; internally everything is
// a dense index. Instances are immutable once built.
class Arena {
 public:
  struct StateInfo {
    std::string id;
    Player owner;
  };
  struct ActionInfo {
    std::string id;
    Player owner;
  };

  const std::vector<StateInfo>& states() const { return states_; }
  const std::vector<ActionInfo>& actions() const { return actions_; }
  const std::vector<std::string>& ap() const { return ap_; }
  int initial() const { return initial_; }

  int state_count() const { return static_cast<int>(states_.size()); }
  int action_count() const { return static_cast<int>(actions_.size()); }

  int state_index(const std::string& id) const;    // -1 when unknown
  int action_index(const std::string& id) const;

  // Enabled actions of a state with their successors, sorted by action index.
  const std::vector<std::pair<int, int>>& enabled(int s) const { return trans_[s]; }

  // Deterministic successor; an action that is not enabled at s is an error.
  int successor(int s, int action) const;

  const std::vector<std::string>& perspectives() const { return perspective_names_; }
  bool has_perspective(const std::string& name) const;

  // Labeling of state s for a perspective, as a bitmask over ap() order.
  uint32_t label_bits(int s, const std::string& perspective) const;
  std::vector<std::string> label_of(int s, const std::string& perspective) const;

  friend class ArenaBuilder;

 private:
  Arena() = default;

  std::vector<StateInfo> states_;
  std::vector<ActionInfo> actions_;
  std::vector<std::vector<std::pair<int, int>>> trans_;
  std::vector<std::string> ap_;
  std::vector<std::string> perspective_names_;
  std::map<std::string, std::vector<uint32_t>> labels_;  // perspective -> per-state mask
  int initial_ = -1;
  std::unordered_map<std::string, int> state_idx_;
  std::unordered_map<std::string, int> action_idx_;
};

// Structural validation: owner partition respected by every transition,
// determinism per (state, action), no move-starved state, an existing initial
// state, sane proposition list. Violations come back as data; an empty report
// means the arena is valid.
std::vector<std::string> validate_arena(const Arena& arena);

// Unknown identifier references (states, actions, propositions, initial) are
// not representable in an Arena and throw model_error immediately; everything
// representable-but-wrong (owner mismatches, nondeterminism, dead ends, a
// missing initial) is left for validate_arena to report.
class ArenaBuilder {
 public:
  ArenaBuilder& add_state(const std::string& id, Player owner);
  ArenaBuilder& add_action(const std::string& id, Player owner);
  ArenaBuilder& add_transition(const std::string& from, const std::string& action,
                               const std::string& to);
  ArenaBuilder& set_ap(std::vector<std::string> ap);  // before any set_label
  ArenaBuilder& set_label(const std::string& perspective, const std::string& state,
                          const std::vector<std::string>& props);
  ArenaBuilder& set_initial(const std::string& id);

  // Validates and throws model_error with the full violation report on failure.
  Arena build() const;

  // For inspecting questionable inputs with validate_arena directly.
  Arena build_unchecked() const;

 private:
  Arena arena_;
};

}  // namespace hypergames

#endif
