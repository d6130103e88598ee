#include "hypergames/arena.hpp"

#include <algorithm>

#include "hypergames/dfa.hpp"
#include "hypergames/errors.hpp"

namespace hypergames {

std::string to_string(Player p) { return p == Player::P1 ? "P1" : "P2"; }

Player player_from_string(const std::string& s) {
  if (s == "P1" || s == "p1" || s == "defender") return Player::P1;
  if (s == "P2" || s == "p2" || s == "attacker") return Player::P2;
  throw model_error("player_from_string: expected P1/P2/defender/attacker, got '" + s + "'");
}

int Arena::state_index(const std::string& id) const {
  auto it = state_idx_.find(id);
  return it == state_idx_.end() ? -1 : it->second;
}

int Arena::action_index(const std::string& id) const {
  auto it = action_idx_.find(id);
  return it == action_idx_.end() ? -1 : it->second;
}

int Arena::successor(int s, int action) const {
  for (const auto& [a, t] : trans_[s])
    if (a == action) return t;
  throw model_error("Arena::successor: action '" + actions_[action].id +
                    "' is not enabled at state '" + states_[s].id + "'");
}

bool Arena::has_perspective(const std::string& name) const {
  return labels_.count(name) > 0;
}

uint32_t Arena::label_bits(int s, const std::string& perspective) const {
  auto it = labels_.find(perspective);
  if (it == labels_.end())
    throw model_error("Arena::label_bits: unknown perspective '" + perspective + "'");
  return it->second[s];
}

std::vector<std::string> Arena::label_of(int s, const std::string& perspective) const {
  uint32_t bits = label_bits(s, perspective);
  std::vector<std::string> out;
  for (size_t i = 0; i < ap_.size(); ++i)
    if (bits & (1u << i)) out.push_back(ap_[i]);
  return out;
}

ArenaBuilder& ArenaBuilder::add_state(const std::string& id, Player owner) {
  if (arena_.state_idx_.count(id))
    throw model_error("ArenaBuilder: duplicate state id '" + id + "'");
  arena_.state_idx_[id] = arena_.state_count();
  arena_.states_.push_back({id, owner});
  arena_.trans_.emplace_back();
  for (auto& [name, masks] : arena_.labels_) {
    (void)name;
    masks.push_back(0);
  }
  return *this;
}

ArenaBuilder& ArenaBuilder::add_action(const std::string& id, Player owner) {
  if (arena_.action_idx_.count(id))
    throw model_error("ArenaBuilder: duplicate action id '" + id + "'");
  arena_.action_idx_[id] = arena_.action_count();
  arena_.actions_.push_back({id, owner});
  return *this;
}

ArenaBuilder& ArenaBuilder::add_transition(const std::string& from, const std::string& action,
                                           const std::string& to) {
  int s = arena_.state_index(from);
  int a = arena_.action_index(action);
  int t = arena_.state_index(to);
  if (s < 0) throw model_error("ArenaBuilder: transition from unknown state '" + from + "'");
  if (a < 0) throw model_error("ArenaBuilder: transition via unknown action '" + action + "'");
  if (t < 0) throw model_error("ArenaBuilder: transition to unknown state '" + to + "'");
  arena_.trans_[s].emplace_back(a, t);
  return *this;
}

ArenaBuilder& ArenaBuilder::set_ap(std::vector<std::string> ap) {
  check_ap_list(ap, "ArenaBuilder::set_ap");
  if (!arena_.labels_.empty())
    throw model_error("ArenaBuilder::set_ap: labels were already assigned");
  arena_.ap_ = std::move(ap);
  return *this;
}

ArenaBuilder& ArenaBuilder::set_label(const std::string& perspective, const std::string& state,
                                      const std::vector<std::string>& props) {
  int s = arena_.state_index(state);
  if (s < 0) throw model_error("ArenaBuilder::set_label: unknown state '" + state + "'");
  auto [it, inserted] = arena_.labels_.try_emplace(
      perspective, std::vector<uint32_t>(arena_.state_count(), 0));
  if (inserted) arena_.perspective_names_.push_back(perspective);
  uint32_t mask = 0;
  for (const auto& p : props) {
    auto pos = std::find(arena_.ap_.begin(), arena_.ap_.end(), p);
    if (pos == arena_.ap_.end())
      throw model_error("ArenaBuilder::set_label: proposition '" + p +
                        "' is not declared (state '" + state + "')");
    mask |= 1u << (pos - arena_.ap_.begin());
  }
  it->second[s] = mask;
  return *this;
}

ArenaBuilder& ArenaBuilder::set_initial(const std::string& id) {
  int s = arena_.state_index(id);
  if (s < 0) throw model_error("ArenaBuilder::set_initial: unknown state '" + id + "'");
  arena_.initial_ = s;
  return *this;
}

Arena ArenaBuilder::build_unchecked() const {
  Arena out = arena_;
  for (auto& edges : out.trans_)
    std::sort(edges.begin(), edges.end());
  // canonical presentation order, independent of insertion or file layout
  std::sort(out.perspective_names_.begin(), out.perspective_names_.end(),
            [](const std::string& a, const std::string& b) {
              if ((a == "true") != (b == "true")) return a == "true";
              return a < b;
            });
  return out;
}

Arena ArenaBuilder::build() const {
  Arena out = build_unchecked();
  auto report = validate_arena(out);
  if (!report.empty()) {
    std::string msg = "ArenaBuilder::build: invalid arena:";
    for (const auto& r : report) msg += "\n  - " + r;
    throw model_error(msg);
  }
  return out;
}

std::vector<std::string> validate_arena(const Arena& arena) {
  std::vector<std::string> report;
  if (arena.state_count() == 0) report.push_back("arena has no states");
  if (arena.initial() < 0) report.push_back("no initial state is set");
  for (int s = 0; s < arena.state_count(); ++s) {
    const auto& edges = arena.enabled(s);
    if (edges.empty())
      report.push_back("state '" + arena.states()[s].id + "' has no enabled action (dead end)");
    for (size_t i = 0; i < edges.size(); ++i) {
      const auto& [a, t] = edges[i];
      (void)t;
      if (arena.actions()[a].owner != arena.states()[s].owner)
        report.push_back("state '" + arena.states()[s].id + "' (owner " +
                         to_string(arena.states()[s].owner) + ") has a transition via action '" +
                         arena.actions()[a].id + "' owned by " +
                         to_string(arena.actions()[a].owner));
      if (i > 0 && edges[i - 1].first == a)
        report.push_back("state '" + arena.states()[s].id + "' has two transitions via action '" +
                         arena.actions()[a].id + "' (nondeterministic)");
    }
  }
  return report;
}

}  // namespace hypergames
