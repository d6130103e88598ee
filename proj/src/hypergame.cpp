#include "hypergames/hypergame.hpp"

#include <algorithm>
#include <deque>

#include "hypergames/errors.hpp"

namespace hypergames {

namespace {

long long triple_key(int s, int q, int p, int nq) {
  return (static_cast<long long>(s) * nq + q) * nq + p;
}

}  // namespace

int Hypergame::find_state(int s, int q, int p) const {
  auto it = index_.find(triple_key(s, q, p, nq_));
  return it == index_.end() ? -1 : it->second;
}

const std::vector<int>& Hypergame::perceived_p1_actions(int s, int p) const {
  return pi1_p2_[flat(s, p)];
}

const std::vector<int>& Hypergame::perceived_p2_actions(int s, int p) const {
  return pi2_p2_[flat(s, p)];
}

Hypergame build_hypergame(const ProductGame& g1, const ProductGame& g2,
                          const WinningAnalysis& a1, const WinningAnalysis& a2,
                          Player objective_owner) {
  if (!g1.full || !g2.full)
    throw model_error("build_hypergame: both products must be full (all (s,q) pairs)");
  if (g1.arena != g2.arena || g1.dfa != g2.dfa)
    throw model_error("build_hypergame: the products disagree on arena or automaton");
  if (a1.reach_player != objective_owner || a2.reach_player != objective_owner)
    throw model_error("build_hypergame: analyses must use the objective owner as reach player");

  const Arena& arena = *g1.arena;
  const Dfa& dfa = *g1.dfa;
  const int nq = dfa.state_count();

  Hypergame hg;
  hg.owner_ = objective_owner;
  hg.g1_ = &g1;
  hg.g2_ = &g2;
  hg.nq_ = nq;

  // Win1 is the defender's region of the true game, whichever side of the
  // analysis that is; the perceived pair mirrors it.
  if (objective_owner == Player::P1) {
    hg.win1_ = a1.win_reach;
    hg.win2_ = a1.win_safe;
    hg.win1_p2_ = a2.win_reach;
    hg.win2_p2_ = a2.win_safe;
  } else {
    hg.win1_ = a1.win_safe;
    hg.win2_ = a1.win_reach;
    hg.win1_p2_ = a2.win_safe;
    hg.win2_p2_ = a2.win_reach;
  }

  // determinacy leaves no residual class; guard the construction anyway
  for (size_t i = 0; i < hg.win1_p2_.size(); ++i)
    if (!hg.win1_p2_[i] && !hg.win2_p2_[i])
      throw model_error("build_hypergame: perceived analysis is not a partition");

  hg.pi1_p2_ = permissive_strategy(g2.graph, a2, Player::P1);
  hg.pi2_p2_ = permissive_strategy(g2.graph, a2, Player::P2);

  hg.graph_.action_name.reserve(arena.action_count() + 1);
  for (const auto& ac : arena.actions()) hg.graph_.action_name.push_back(ac.id);
  hg.hold_action_ = arena.action_count();
  hg.graph_.action_name.push_back("hold");

  auto intern = [&](int s, int q, int p) {
    long long key = triple_key(s, q, p, nq);
    auto it = hg.index_.find(key);
    if (it != hg.index_.end()) return it->second;
    int id = hg.state_count();
    hg.index_.emplace(key, id);
    hg.states_.push_back({s, q, p});
    hg.graph_.owner.push_back(arena.states()[s].owner);
    hg.graph_.edges.emplace_back();
    hg.graph_.state_name.push_back("(" + arena.states()[s].id + "," + dfa.state_name[q] + "," +
                                   dfa.state_name[p] + ")");
    hg.target_.push_back(hg.win1_[s * nq + q]);
    hg.divergence_.push_back(q != p);
    return id;
  };

  // initial components: the automaton consumed each labeling of the initial
  // arena state
  const int s0 = arena.initial();
  auto [i1s, q0] = g1.project_state(g1.initial);
  auto [i2s, p0] = g2.project_state(g2.initial);
  (void)i1s;
  (void)i2s;
  hg.initial_ = intern(s0, q0, p0);

  std::deque<int> todo{hg.initial_};
  while (!todo.empty()) {
    int id = todo.front();
    todo.pop_front();
    auto [s, q, p] = hg.states_[id];
    if (hg.target_[id]) {
      hg.graph_.edges[id].emplace_back(hg.hold_action_, id);
      continue;
    }

    // perception-filtered action set
    const std::vector<int>* allowed = nullptr;
    Player who = arena.states()[s].owner;
    if (who == Player::P1 && hg.win1_p2_[s * nq + p])
      allowed = &hg.pi1_p2_[s * nq + p];
    else if (who == Player::P2 && hg.win2_p2_[s * nq + p])
      allowed = &hg.pi2_p2_[s * nq + p];

    for (const auto& [a, t] : arena.enabled(s)) {
      if (allowed &&
          std::find(allowed->begin(), allowed->end(), a) == allowed->end())
        continue;
      auto [t1, q2] = g1.project_state(g1.graph.successor(s * nq + q, a));
      auto [t2, p2] = g2.project_state(g2.graph.successor(s * nq + p, a));
      (void)t1;
      (void)t2;
      int before = hg.state_count();
      int succ = intern(t, q2, p2);
      if (succ == before) todo.push_back(succ);
      hg.graph_.edges[id].emplace_back(a, succ);
    }
    if (hg.graph_.edges[id].empty())
      // a filtered state can lose all moves only if the permissive set was
      // empty, which the fixed point rules out; defend against it anyway
      throw model_error("build_hypergame: state '" + hg.graph_.state_name[id] +
                        "' lost all actions to filtering");
  }
  hg.graph_.initial = hg.initial_;
  return hg;
}

DeceptionResult deceptive_sure_winning(const Hypergame& hg) {
  auto analysis = sure_winning_regions(hg.graph(), Player::P1, hg.target());
  DeceptionResult out;
  out.region = analysis.win_reach;
  out.rank = analysis.rank;
  out.strategy = positional_strategy(hg.graph(), analysis, Player::P1);
  return out;
}

std::vector<std::string> check_stealthy(const Hypergame& hg, const PositionalStrategy& strategy,
                                        const PerceptionPartition& partition) {
  std::vector<std::string> violations;
  const ProductGame& g2 = hg.perceived_product();
  const int nq = g2.dfa->state_count();
  for (int id = 0; id < hg.state_count(); ++id) {
    if (!strategy.defined_at(id)) continue;
    auto [s, q, p] = hg.states()[id];
    if (hg.graph().owner[id] != Player::P1) continue;
    // information can only leak where the truth and the perception disagree
    // about who is winning: the attacker truly wins yet believes the defender
    // does
    if (partition.defender_sure[s * nq + q]) continue;  // truly won; classical play
    if (!hg.in_win2(s, q) || !hg.in_win1_perceived(s, p)) continue;
    int a = strategy.action[id];
    if (a == hg.hold_action()) continue;
    // recompute perceived-rationality from the perceived product instead of
    // trusting the builder's filtered edges: the move must keep (s,p) inside
    // the perceived defender-winning region (or that region is already final
    // there, where any move reads as rational)
    bool ok;
    if (hg.objective_owner() == Player::P1 && g2.final_state[s * nq + p]) {
      ok = true;
    } else {
      int succ = g2.graph.successor(s * nq + p, a);
      auto [t, p2] = g2.project_state(succ);
      (void)t;
      ok = hg.in_win1_perceived(t, p2);
    }
    if (!ok)
      violations.push_back("state " + hg.graph().state_name[id] + ": move '" +
                           hg.graph().action_name[a] +
                           "' leaves the perceived defender-winning region");
  }
  return violations;
}

PerceptionPartition classify_states(const WinningAnalysis& a1, const WinningAnalysis& a2,
                                    Player objective_owner) {
  const std::vector<char>& win1 =
      objective_owner == Player::P1 ? a1.win_reach : a1.win_safe;
  const std::vector<char>& win2 =
      objective_owner == Player::P1 ? a1.win_safe : a1.win_reach;
  const std::vector<char>& win1_p2 =
      objective_owner == Player::P1 ? a2.win_reach : a2.win_safe;
  const std::vector<char>& win2_p2 =
      objective_owner == Player::P1 ? a2.win_safe : a2.win_reach;
  if (win1.size() != win1_p2.size())
    throw model_error("classify_states: analyses cover different state spaces");

  const size_t n = win1.size();
  PerceptionPartition out;
  out.defender_sure.assign(n, 0);
  out.misperceived_losing.assign(n, 0);
  out.perceived_and_winning.assign(n, 0);
  out.residual.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    if (win1[i])
      out.defender_sure[i] = 1;
    else if (win2[i] && win1_p2[i])
      out.misperceived_losing[i] = 1;
    else if (win2[i] && win2_p2[i])
      out.perceived_and_winning[i] = 1;
    else
      out.residual[i] = 1;
  }
  return out;
}

SynthesisResult synthesize_deception(const Arena& arena, const Dfa& dfa, Player objective_owner,
                                     const std::string& true_perspective,
                                     const std::string& attacker_perspective) {
  SynthesisResult res;
  res.g1 = std::make_unique<ProductGame>(build_full_product(arena, dfa, true_perspective));
  res.g2 = std::make_unique<ProductGame>(build_full_product(arena, dfa, attacker_perspective));
  res.a1 = sure_winning_regions(res.g1->graph, objective_owner, res.g1->final_state);
  res.a2 = sure_winning_regions(res.g2->graph, objective_owner, res.g2->final_state);
  res.hg = build_hypergame(*res.g1, *res.g2, res.a1, res.a2, objective_owner);
  res.deception = deceptive_sure_winning(res.hg);
  res.partition = classify_states(res.a1, res.a2, objective_owner);
  res.stealth_report = check_stealthy(res.hg, res.deception.strategy, res.partition);
  return res;
}

}  // namespace hypergames
