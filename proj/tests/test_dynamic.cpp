#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>

#include "hypergames/dynamic.hpp"
#include "hypergames/errors.hpp"
#include "hypergames/hypergame.hpp"
#include "support/fixtures.hpp"

using namespace hypergames;

namespace {

LabelingFamily toy_family(const Arena& toy) {
  return make_labeling_family(toy, fixtures::toy_sites(toy), {2});
}

}  // namespace

TEST_CASE("labeling families are validated against the arena") {
  Arena toy = fixtures::toy_arena();
  LabelingFamily fam = toy_family(toy);
  CHECK(fam.decoy_prop == 2);
  CHECK(fam.decoy_sites == std::vector<int>{2});
  CHECK(fam.full_dmask() == 1u);
  CHECK(fam.site_position(2) == 0);
  CHECK(fam.site_position(3) == -1);
  CHECK(fam.dmask_name(0) == "{}");
  CHECK(fam.dmask_name(1) == "{2}");

  int s2 = toy.state_index("(2,A,circle)");
  int s3 = toy.state_index("(3,B,square)");
  CHECK(fam.label_bits(s2, 0) == toy.label_bits(s2, "P2"));
  CHECK(fam.label_bits(s2, 1) == toy.label_bits(s2, "true"));
  CHECK(fam.label_bits(s3, 0) == toy.label_bits(s3, "true"));  // no decoy there anyway

  // wrong site vector length
  CHECK_THROWS_AS(make_labeling_family(toy, {0, 1}, {2}), model_error);
  // claiming no decoy sites contradicts the true labeling
  CHECK_THROWS_AS(make_labeling_family(toy, fixtures::toy_sites(toy), {}), model_error);
  // claiming the wrong site does too
  CHECK_THROWS_AS(make_labeling_family(toy, fixtures::toy_sites(toy), {3}), model_error);

  // an arena without the marker proposition cannot form a family
  ArenaBuilder b;
  b.add_state("u", Player::P2);
  b.add_action("a", Player::P2);
  b.add_transition("u", "a", "u");
  b.set_ap({"p"});
  b.set_initial("u");
  Arena bare = b.build();
  CHECK_THROWS_AS(make_labeling_family(bare, {0}, {}), model_error);
}

TEST_CASE("a compiled network hands over its family directly") {
  CompiledNetwork net = compile_network(load_network_file(fixtures::path("toy_ab.net.json")));
  LabelingFamily fam = labeling_family_of(net);
  CHECK(fam.decoy_prop == 4);
  CHECK(fam.decoy_sites == std::vector<int>{2});
  CHECK(fam.label_bits(net.arena.initial(), 0) ==
        net.arena.label_bits(net.arena.initial(), "P2"));
}

TEST_CASE("the empty-discovery filter is the perceived-game analysis") {
  Arena toy = fixtures::toy_arena();
  Dfa d = fixtures::dfa_of("!decoy U h3", toy.ap());
  LabelingFamily fam = toy_family(toy);

  RoundFilter rf = make_round_filter(toy, d, fam, Player::P2, 0);
  SynthesisResult res = synthesize_deception(toy, d, Player::P2);
  CHECK(rf.analysis.win_reach == res.a2.win_reach);
  CHECK(rf.analysis.win_safe == res.a2.win_safe);
  CHECK(rf.analysis.rank == res.a2.rank);
}

TEST_CASE("after one burn the filter steers around the trap") {
  Arena toy = fixtures::toy_arena();
  Dfa d = fixtures::dfa_of("!h3 U decoy", toy.ap());
  LabelingFamily fam = toy_family(toy);
  auto sites = fixtures::toy_sites(toy);

  RoundFilter rf = make_round_filter(toy, d, fam, Player::P1, 1);

  int junctionA = toy.state_index("(1,A,circle)");
  int junctionB = toy.state_index("(1,B,circle)");
  const auto* atA = rf.allowed(junctionA, d.initial);
  REQUIRE(atA != nullptr);
  CHECK(*atA == std::vector<int>{toy.action_index("to-3")});
  // under the thin topology every road runs through the known trap: the
  // attacker perceives herself losing, so no rationality constraint applies
  CHECK(rf.allowed(junctionB, d.initial) == nullptr);

  // with her objective already dead she is indifferent, decoys included
  REQUIRE(d.sink >= 0);
  const auto* resigned = rf.allowed(junctionA, d.sink);
  REQUIRE(resigned != nullptr);
  CHECK(std::find(resigned->begin(), resigned->end(), toy.action_index("to-2")) !=
        resigned->end());

  // scoped claim: wherever her objective is still alive, no allowed move
  // enters the discovered decoy site
  for (int s = 0; s < toy.state_count(); ++s) {
    if (toy.states()[s].owner != Player::P2) continue;
    for (int q2 = 0; q2 < d.state_count(); ++q2) {
      if (q2 == d.sink || d.accepting[q2]) continue;
      const auto* acts = rf.allowed(s, q2);
      if (!acts) continue;
      for (int a : *acts) CHECK(sites[toy.successor(s, a)] != 2);
    }
  }
}

TEST_CASE("an immediately-satisfied objective never needs a second round") {
  Arena toy = fixtures::toy_arena();
  Dfa d = fixtures::dfa_of("!h3 U decoy", toy.ap());
  DynGame dyn = build_dynamic_hypergame(toy, d, toy_family(toy), Player::P1);

  CHECK(dyn.max_discoveries() == 1);
  CHECK(dyn.state_count() <= 1000);
  for (const auto& st : dyn.states()) {
    CHECK(st.dmask == 0u);
    CHECK(!st.pending);
  }
}

TEST_CASE("a two-step objective forces discovery and restart") {
  Arena toy = fixtures::toy_arena();
  Dfa d = fixtures::dfa_of("h2 && X h3", toy.ap());
  LabelingFamily fam = toy_family(toy);
  DynGame dyn = build_dynamic_hypergame(toy, d, fam, Player::P1);

  CHECK(dyn.state_count() <= 1000);

  int pending_seen = 0;
  int restart_edges = 0;
  for (int id = 0; id < dyn.state_count(); ++id) {
    const auto& st = dyn.states()[id];
    const auto& edges = dyn.graph().edges[id];

    // discoveries only accumulate
    for (auto [a, to] : edges)
      CHECK((st.dmask & ~dyn.states()[to].dmask) == 0u);

    if (st.pending) {
      ++pending_seen;
      CHECK(st.dmask == 1u);
      CHECK(dyn.graph().owner[id] == Player::P1);
      REQUIRE(edges.size() == 1);
      CHECK(edges[0].first == dyn.restart_action());
      ++restart_edges;
      const auto& fresh = dyn.states()[edges[0].second];
      CHECK(fresh.s == toy.initial());
      CHECK(fresh.dmask == 1u);
      CHECK(!fresh.pending);
      CHECK(fresh.q1 == d.step(d.initial, toy.label_bits(toy.initial(), "true")));
      CHECK(fresh.q2 == d.step(d.initial, fam.label_bits(toy.initial(), 1)));
    }
  }
  CHECK(pending_seen > 0);
  CHECK(restart_edges == pending_seen);

  // the second round tracks the decoy-aware labeling
  bool informed_entry = false;
  auto sites = fixtures::toy_sites(toy);
  for (const auto& st : dyn.states())
    if (!st.pending && st.dmask == 1u && sites[st.s] == 2) informed_entry = true;
  CHECK(informed_entry);
}

TEST_CASE("a zero budget parks the play instead of restarting") {
  Arena toy = fixtures::toy_arena();
  Dfa d = fixtures::dfa_of("h2 && X h3", toy.ap());
  DynGame dyn = build_dynamic_hypergame(toy, d, toy_family(toy), Player::P1, 0);

  int parked = 0;
  for (int id = 0; id < dyn.state_count(); ++id) {
    if (!dyn.states()[id].pending) continue;
    ++parked;
    const auto& edges = dyn.graph().edges[id];
    REQUIRE(edges.size() == 1);
    CHECK(edges[0].first == dyn.hold_action());
    CHECK(edges[0].second == id);
    CHECK(!dyn.target()[id]);
  }
  CHECK(parked > 0);
}

TEST_CASE("across rounds the defender wins the toy walk") {
  Arena toy = fixtures::toy_arena();
  Dfa d = fixtures::dfa_of("!h3 U decoy", toy.ap());
  DynGame dyn = build_dynamic_hypergame(toy, d, toy_family(toy), Player::P1);
  DynSolution sol = solve_repeated(dyn);
  REQUIRE(dyn.initial() >= 0);
  CHECK(!dyn.target()[dyn.initial()]);  // winning, but not won yet
  CHECK(sol.region[dyn.initial()]);
  CHECK(sol.strategy.defined_at(dyn.initial()) ==
        (dyn.graph().owner[dyn.initial()] == Player::P1));
}

TEST_CASE("filters are cached per discovery set") {
  Arena toy = fixtures::toy_arena();
  Dfa d = fixtures::dfa_of("!h3 U decoy", toy.ap());
  DynGame dyn = build_dynamic_hypergame(toy, d, toy_family(toy), Player::P1);
  const RoundFilter& a = dyn.round_filter(0);
  const RoundFilter& b = dyn.round_filter(0);
  CHECK(&a == &b);
}
