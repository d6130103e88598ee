#include "hypergames/solver.hpp"

#include <algorithm>

#include "hypergames/errors.hpp"

namespace hypergames {

namespace {

AttractorResult attractor_worklist(const GameGraph& g, Player player,
                                   const std::vector<char>& target) {
  const int n = g.state_count();
  AttractorResult res{std::vector<char>(n, 0), std::vector<int>(n, -1)};

  // reverse edges and, for opponent states, pending-successor counters
  std::vector<std::vector<int>> preds(n);
  std::vector<int> pending(n, 0);
  for (int s = 0; s < n; ++s) {
    pending[s] = static_cast<int>(g.edges[s].size());
    for (const auto& [a, t] : g.edges[s]) {
      (void)a;
      preds[t].push_back(s);
    }
  }

  std::vector<int> frontier;
  for (int s = 0; s < n; ++s)
    if (target[s]) {
      res.in_region[s] = 1;
      res.rank[s] = 0;
      frontier.push_back(s);
    }

  // waves keep ranks identical to the naive iteration index
  int wave = 0;
  while (!frontier.empty()) {
    ++wave;
    std::vector<int> next;
    for (int t : frontier) {
      // preds[t] holds one entry per edge into t, so each edge decrements the
      // pending counter of an opponent predecessor exactly once (t enters the
      // frontier exactly once).
      for (int s : preds[t]) {
        bool add = false;
        if (g.owner[s] == player) {
          add = !res.in_region[s];
        } else {
          --pending[s];
          add = (pending[s] == 0) && !res.in_region[s];
        }
        if (add) {
          res.in_region[s] = 1;
          res.rank[s] = wave;
          next.push_back(s);
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  return res;
}

AttractorResult attractor_naive(const GameGraph& g, Player player,
                                const std::vector<char>& target) {
  const int n = g.state_count();
  AttractorResult res{std::vector<char>(n, 0), std::vector<int>(n, -1)};
  for (int s = 0; s < n; ++s)
    if (target[s]) {
      res.in_region[s] = 1;
      res.rank[s] = 0;
    }
  int wave = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    ++wave;
    std::vector<int> added;
    for (int s = 0; s < n; ++s) {
      if (res.in_region[s]) continue;
      bool add;
      if (g.owner[s] == player) {
        add = false;
        for (const auto& [a, t] : g.edges[s]) {
          (void)a;
          if (res.in_region[t]) {
            add = true;
            break;
          }
        }
      } else {
        add = true;
        for (const auto& [a, t] : g.edges[s]) {
          (void)a;
          if (!res.in_region[t]) {
            add = false;
            break;
          }
        }
      }
      if (add) added.push_back(s);
    }
    for (int s : added) {
      res.in_region[s] = 1;
      res.rank[s] = wave;
      changed = true;
    }
  }
  return res;
}

}  // namespace

AttractorResult attractor(const GameGraph& g, Player player, const std::vector<char>& target,
                          AttractorMode mode) {
  if (target.size() != g.owner.size())
    throw model_error("attractor: target set size does not match the game");
  return mode == AttractorMode::worklist ? attractor_worklist(g, player, target)
                                         : attractor_naive(g, player, target);
}

WinningAnalysis sure_winning_regions(const GameGraph& g, Player reach_player,
                                     const std::vector<char>& targets, AttractorMode mode) {
  auto att = attractor(g, reach_player, targets, mode);
  WinningAnalysis out;
  out.reach_player = reach_player;
  out.win_reach = std::move(att.in_region);
  out.rank = std::move(att.rank);
  out.target = targets;
  out.win_safe.resize(g.state_count());
  for (int s = 0; s < g.state_count(); ++s) out.win_safe[s] = !out.win_reach[s];
  return out;
}

std::vector<std::vector<int>> permissive_strategy(const GameGraph& g,
                                                  const WinningAnalysis& analysis,
                                                  Player player) {
  const bool reach_side = (player == analysis.reach_player);
  const std::vector<char>& region = reach_side ? analysis.win_reach : analysis.win_safe;
  std::vector<std::vector<int>> out(g.state_count());
  for (int s = 0; s < g.state_count(); ++s) {
    if (!region[s] || g.owner[s] != player) continue;
    if (reach_side && analysis.target[s]) {
      for (const auto& [a, t] : g.edges[s]) {
        (void)t;
        out[s].push_back(a);
      }
      continue;
    }
    for (const auto& [a, t] : g.edges[s])
      if (region[t]) out[s].push_back(a);
  }
  return out;
}

PositionalStrategy positional_strategy(const GameGraph& g, const WinningAnalysis& analysis,
                                       Player player) {
  PositionalStrategy out{std::vector<int>(g.state_count(), -1)};
  if (player == analysis.reach_player) {
    for (int s = 0; s < g.state_count(); ++s) {
      if (!analysis.win_reach[s] || analysis.target[s] || g.owner[s] != player) continue;
      int best = -1, best_rank = -1;
      for (const auto& [a, t] : g.edges[s]) {
        if (!analysis.win_reach[t]) continue;
        if (best == -1 || analysis.rank[t] < best_rank) {
          best = a;
          best_rank = analysis.rank[t];
        }
      }
      out.action[s] = best;  // edges are action-sorted, so ties pick the smallest id
    }
  } else {
    for (int s = 0; s < g.state_count(); ++s) {
      if (!analysis.win_safe[s] || g.owner[s] != player) continue;
      for (const auto& [a, t] : g.edges[s])
        if (analysis.win_safe[t]) {
          out.action[s] = a;
          break;
        }
    }
  }
  return out;
}

}  // namespace hypergames
