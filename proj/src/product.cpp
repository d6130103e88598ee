#include "hypergames/product.hpp"

#include <deque>

#include "hypergames/errors.hpp"

namespace hypergames {

namespace {

void check_compatible(const Arena& arena, const Dfa& dfa, const std::string& perspective,
                      bool need_perspective) {
  if (dfa.ap != arena.ap())
    throw model_error(
        "build_product: automaton alphabet does not match the arena propositions "
        "(same names in the same order required)");
  if (need_perspective && !arena.has_perspective(perspective))
    throw model_error("build_product: unknown perspective '" + perspective + "'");
}

std::string product_state_name(const Arena& arena, const Dfa& dfa, int s, int q) {
  return "(" + arena.states()[s].id + "," + dfa.state_name[q] + ")";
}

ProductGame build_full(const Arena& arena, const Dfa& dfa,
                       const std::function<uint32_t(int)>& labels, const std::string& name) {
  ProductGame pg;
  pg.arena = &arena;
  pg.dfa = &dfa;
  pg.perspective = name;
  pg.full = true;

  const int nq = dfa.state_count();
  const int n = arena.state_count() * nq;
  pg.state_sq.resize(n);
  pg.final_state.assign(n, 0);
  pg.graph.owner.resize(n);
  pg.graph.edges.resize(n);
  pg.graph.state_name.resize(n);
  pg.graph.action_name.reserve(arena.action_count());
  for (const auto& ac : arena.actions()) pg.graph.action_name.push_back(ac.id);

  for (int s = 0; s < arena.state_count(); ++s) {
    for (int q = 0; q < nq; ++q) {
      int idx = s * nq + q;
      pg.state_sq[idx] = {s, q};
      pg.final_state[idx] = dfa.accepting[q];
      pg.graph.owner[idx] = arena.states()[s].owner;
      pg.graph.state_name[idx] = product_state_name(arena, dfa, s, q);
      auto& edges = pg.graph.edges[idx];
      for (const auto& [a, t] : arena.enabled(s)) {
        int q2 = dfa.step(q, labels(t));
        edges.emplace_back(a, t * nq + q2);
      }
    }
  }
  pg.initial = arena.initial() * nq + dfa.step(dfa.initial, labels(arena.initial()));
  pg.graph.initial = pg.initial;
  return pg;
}

}  // namespace

int ProductGame::index_of(int s, int q) const {
  int flat = s * dfa->state_count() + q;
  if (full) return flat;
  return index_[flat];
}

ProductGame build_full_product(const Arena& arena, const Dfa& dfa,
                               const std::function<uint32_t(int)>& labels,
                               const std::string& name) {
  check_compatible(arena, dfa, name, false);
  return build_full(arena, dfa, labels, name);
}

ProductGame build_full_product(const Arena& arena, const Dfa& dfa,
                               const std::string& perspective) {
  check_compatible(arena, dfa, perspective, true);
  return build_full(
      arena, dfa, [&](int s) { return arena.label_bits(s, perspective); }, perspective);
}

ProductGame build_product(const Arena& arena, const Dfa& dfa, const std::string& perspective) {
  check_compatible(arena, dfa, perspective, true);

  ProductGame pg;
  pg.arena = &arena;
  pg.dfa = &dfa;
  pg.perspective = perspective;
  pg.full = false;

  const int nq = dfa.state_count();
  pg.index_.assign(arena.state_count() * nq, -1);
  pg.graph.action_name.reserve(arena.action_count());
  for (const auto& ac : arena.actions()) pg.graph.action_name.push_back(ac.id);

  auto intern = [&](int s, int q) {
    int& slot = pg.index_[s * nq + q];
    if (slot != -1) return slot;
    slot = pg.state_count();
    pg.state_sq.emplace_back(s, q);
    pg.final_state.push_back(dfa.accepting[q]);
    pg.graph.owner.push_back(arena.states()[s].owner);
    pg.graph.edges.emplace_back();
    pg.graph.state_name.push_back(product_state_name(arena, dfa, s, q));
    return slot;
  };

  int s0 = arena.initial();
  int q0 = dfa.step(dfa.initial, arena.label_bits(s0, perspective));
  pg.initial = intern(s0, q0);
  std::deque<int> todo{pg.initial};
  while (!todo.empty()) {
    int idx = todo.front();
    todo.pop_front();
    auto [s, q] = pg.state_sq[idx];
    for (const auto& [a, t] : arena.enabled(s)) {
      int q2 = dfa.step(q, arena.label_bits(t, perspective));
      int before = pg.state_count();
      int succ = intern(t, q2);
      if (succ == before) todo.push_back(succ);
      pg.graph.edges[idx].emplace_back(a, succ);
    }
  }
  pg.graph.initial = pg.initial;
  return pg;
}

}  // namespace hypergames
