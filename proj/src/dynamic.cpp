#include "hypergames/dynamic.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

#include "hypergames/errors.hpp"

namespace hypergames {

uint32_t LabelingFamily::label_bits(int s, uint32_t dmask) const {
  uint32_t bits = base[s];
  int pos = site_position(site[s]);
  if (pos >= 0 && (dmask >> pos & 1u)) bits |= uint32_t{1} << decoy_prop;
  return bits;
}

int LabelingFamily::site_position(int site_id) const {
  auto it = std::lower_bound(decoy_sites.begin(), decoy_sites.end(), site_id);
  if (it == decoy_sites.end() || *it != site_id) return -1;
  return static_cast<int>(it - decoy_sites.begin());
}

std::string LabelingFamily::dmask_name(uint32_t dmask) const {
  std::string out = "{";
  for (std::size_t i = 0; i < decoy_sites.size(); ++i)
    if (dmask >> i & 1u) {
      if (out.size() > 1) out += ',';
      out += std::to_string(decoy_sites[i]);
    }
  return out + "}";
}

LabelingFamily make_labeling_family(const Arena& arena, std::vector<int> site,
                                    std::vector<int> decoy_sites) {
  if (static_cast<int>(site.size()) != arena.state_count())
    throw model_error("make_labeling_family: site list does not cover the arena");
  std::sort(decoy_sites.begin(), decoy_sites.end());
  decoy_sites.erase(std::unique(decoy_sites.begin(), decoy_sites.end()), decoy_sites.end());
  if (decoy_sites.size() > 31)
    throw model_error("make_labeling_family: more than 31 decoy sites");

  LabelingFamily fam;
  fam.arena = &arena;
  fam.site = std::move(site);
  fam.decoy_sites = std::move(decoy_sites);
  const auto& ap = arena.ap();
  for (std::size_t i = 0; i < ap.size(); ++i)
    if (ap[i] == "decoy") fam.decoy_prop = static_cast<int>(i);
  if (fam.decoy_prop < 0) throw model_error("make_labeling_family: arena has no 'decoy' prop");

  fam.base.resize(arena.state_count());
  const uint32_t decoy_bit = uint32_t{1} << fam.decoy_prop;
  for (int s = 0; s < arena.state_count(); ++s) {
    fam.base[s] = arena.label_bits(s, "P2");
    if (fam.base[s] & decoy_bit)
      throw model_error("make_labeling_family: attacker labeling already shows 'decoy' at " +
                        arena.states()[s].id);
    if (fam.label_bits(s, fam.full_dmask()) != arena.label_bits(s, "true"))
      throw model_error(
          "make_labeling_family: full discovery does not reproduce the true labeling at " +
          arena.states()[s].id);
  }
  return fam;
}

LabelingFamily labeling_family_of(const CompiledNetwork& net) {
  return make_labeling_family(net.arena, net.site, net.decoy_sites);
}

const std::vector<int>* RoundFilter::allowed(int s, int q2) const {
  if (product->arena->states()[s].owner != Player::P2) return nullptr;
  int flat = product->index_of(s, q2);
  bool hers = analysis.reach_player == Player::P2 ? analysis.win_reach[flat] != 0
                                                  : analysis.win_safe[flat] != 0;
  return hers ? &p2_actions[flat] : nullptr;
}

RoundFilter make_round_filter(const Arena& arena, const Dfa& dfa, const LabelingFamily& family,
                              Player objective_owner, uint32_t dmask) {
  RoundFilter rf;
  rf.product = std::make_unique<ProductGame>(build_full_product(
      arena, dfa, [&family, dmask](int s) { return family.label_bits(s, dmask); },
      "L" + family.dmask_name(dmask)));
  rf.analysis =
      sure_winning_regions(rf.product->graph, objective_owner, rf.product->final_state);
  rf.p2_actions = permissive_strategy(rf.product->graph, rf.analysis, Player::P2);
  return rf;
}

int DynGame::find_state(int s, int q1, int q2, uint32_t dmask, bool pending) const {
  std::string key = std::to_string(s) + '|' + std::to_string(q1) + '|' + std::to_string(q2) +
                    '|' + std::to_string(dmask) + (pending ? "|r" : "");
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

const RoundFilter& DynGame::round_filter(uint32_t dmask) const {
  auto it = filters_.find(dmask);
  if (it == filters_.end())
    it = filters_.emplace(dmask, make_round_filter(*arena_, *dfa_, *family_, owner_, dmask))
             .first;
  return it->second;
}

DynGame build_dynamic_hypergame(const Arena& arena, const Dfa& dfa, const LabelingFamily& family,
                                Player objective_owner, int max_discoveries, std::size_t cap) {
  if (family.arena != &arena)
    throw model_error("build_dynamic_hypergame: labeling family built for a different arena");
  if (max_discoveries < 0) max_discoveries = static_cast<int>(family.decoy_sites.size());

  DynGame g;
  g.arena_ = &arena;
  g.dfa_ = &dfa;
  g.family_ = &family;
  g.owner_ = objective_owner;
  g.max_discoveries_ = max_discoveries;

  for (const auto& a : arena.actions()) g.graph_.action_name.push_back(a.id);
  g.hold_action_ = static_cast<int>(g.graph_.action_name.size());
  g.graph_.action_name.push_back("hold");
  g.restart_action_ = static_cast<int>(g.graph_.action_name.size());
  g.graph_.action_name.push_back("restart");

  auto true_bits = [&](int s) { return arena.label_bits(s, "true"); };

  std::deque<int> queue;
  auto intern = [&](int s, int q1, int q2, uint32_t dmask, bool pending, bool is_target) {
    std::string key = std::to_string(s) + '|' + std::to_string(q1) + '|' + std::to_string(q2) +
                      '|' + std::to_string(dmask) + (pending ? "|r" : "");
    auto it = g.index_.find(key);
    if (it != g.index_.end()) return it->second;
    if (g.states_.size() >= cap)
      throw cap_exceeded_error("build_dynamic_hypergame: state cap exceeded (" +
                               std::to_string(cap) + ")");
    int idx = static_cast<int>(g.states_.size());
    g.index_.emplace(std::move(key), idx);
    g.states_.push_back({s, q1, q2, dmask, pending});
    // the restart bookkeeping move belongs to the defender
    g.graph_.owner.push_back(pending ? Player::P1 : arena.states()[s].owner);
    std::ostringstream name;
    name << '(' << arena.states()[s].id << ',' << dfa.state_name[q1] << ','
         << dfa.state_name[q2] << ",D=" << family.dmask_name(dmask);
    if (pending) name << ",restart";
    name << ')';
    g.graph_.state_name.push_back(name.str());
    g.graph_.edges.emplace_back();
    g.target_.push_back(is_target ? 1 : 0);
    queue.push_back(idx);
    return idx;
  };

  // Classifies an arrival: target once the true-label run accepts, restart
  // bookkeeping when an unknown decoy is hit (recording the discovery), plain
  // otherwise. Walking into an already-discovered decoy is an ordinary move.
  auto arrive = [&](int s, int q1, int q2, uint32_t dmask) {
    if (g.dfa_->accepting[q1]) return intern(s, q1, q2, dmask, false, true);
    int pos = family.site_position(family.site[s]);
    if (pos >= 0 && !(dmask >> pos & 1u))
      return intern(s, q1, q2, dmask | uint32_t{1} << pos, true, false);
    return intern(s, q1, q2, dmask, false, false);
  };

  int s0 = arena.initial();
  g.initial_ = arrive(s0, dfa.step(dfa.initial, true_bits(s0)),
                      dfa.step(dfa.initial, family.label_bits(s0, 0)), 0);

  while (!queue.empty()) {
    int idx = queue.front();
    queue.pop_front();
    DynGame::DState st = g.states_[idx];  // by value: interning reallocates states_

    if (g.target_[idx]) {
      g.graph_.edges[idx].emplace_back(g.hold_action_, idx);
      continue;
    }
    if (st.pending) {
      if (std::popcount(st.dmask) > max_discoveries) {
        // discovery budget exhausted; the play parks here
        g.graph_.edges[idx].emplace_back(g.hold_action_, idx);
        continue;
      }
      int j = arrive(s0, dfa.step(dfa.initial, true_bits(s0)),
                     dfa.step(dfa.initial, family.label_bits(s0, st.dmask)), st.dmask);
      g.graph_.edges[idx].emplace_back(g.restart_action_, j);
      continue;
    }

    const std::vector<int>* allow = nullptr;
    if (arena.states()[st.s].owner == Player::P2)
      allow = g.round_filter(st.dmask).allowed(st.s, st.q2);
    bool any = false;
    for (const auto& [a, succ] : arena.enabled(st.s)) {
      if (allow && std::find(allow->begin(), allow->end(), a) == allow->end()) continue;
      any = true;
      int j = arrive(succ, dfa.step(st.q1, true_bits(succ)),
                     dfa.step(st.q2, family.label_bits(succ, st.dmask)), st.dmask);
      g.graph_.edges[idx].emplace_back(a, j);
    }
    if (!any)
      throw model_error("build_dynamic_hypergame: rationality filter starved " +
                        g.graph_.state_name[idx]);
    std::sort(g.graph_.edges[idx].begin(), g.graph_.edges[idx].end());
  }

  g.graph_.initial = g.initial_;
  return g;
}

DynSolution solve_repeated(const DynGame& game) {
  WinningAnalysis a = sure_winning_regions(game.graph(), Player::P1, game.target());
  DynSolution sol;
  sol.region = a.win_reach;
  sol.rank = a.rank;
  sol.strategy = positional_strategy(game.graph(), a, Player::P1);
  return sol;
}

}  // namespace hypergames
