#include "support/fixtures.hpp"

#include "hypergames/parser.hpp"

namespace fixtures {

using namespace hypergames;

std::string path(const std::string& name) {
  return std::string(HGS_FIXTURES_DIR) + "/" + name;
}

std::string toy_state(int node, char topo, bool attacker_turn) {
  return "(" + std::to_string(node) + "," + std::string(1, topo) + "," +
         (attacker_turn ? "circle" : "square") + ")";
}

Arena toy_arena(const std::string& initial) {
  ArenaBuilder b;
  for (char topo : {'A', 'B'})
    for (int node = 0; node < 4; ++node) {
      b.add_state(toy_state(node, topo, true), Player::P2);
      b.add_state(toy_state(node, topo, false), Player::P1);
    }
  b.add_action("to-1", Player::P2);
  b.add_action("to-2", Player::P2);
  b.add_action("to-3", Player::P2);
  b.add_action("stay", Player::P2);
  b.add_action("switch-to-A", Player::P1);
  b.add_action("switch-to-B", Player::P1);

  auto attack = [&](char topo, int from, int to) {
    b.add_transition(toy_state(from, topo, true), "to-" + std::to_string(to),
                     toy_state(to, topo, false));
  };
  attack('A', 0, 1);
  attack('A', 1, 2);
  attack('A', 1, 3);
  attack('A', 2, 3);
  attack('B', 0, 1);
  attack('B', 1, 2);
  attack('B', 2, 3);
  for (char topo : {'A', 'B'}) {
    b.add_transition(toy_state(3, topo, true), "stay", toy_state(3, topo, false));
    for (int node = 0; node < 4; ++node) {
      b.add_transition(toy_state(node, topo, false), "switch-to-A",
                       toy_state(node, 'A', true));
      b.add_transition(toy_state(node, topo, false), "switch-to-B",
                       toy_state(node, 'B', true));
    }
  }

  b.set_ap({"h2", "h3", "decoy"});
  for (char topo : {'A', 'B'})
    for (bool turn : {true, false}) {
      b.set_label("true", toy_state(2, topo, turn), {"h2", "decoy"});
      b.set_label("P2", toy_state(2, topo, turn), {"h2"});
      b.set_label("true", toy_state(3, topo, turn), {"h3"});
      b.set_label("P2", toy_state(3, topo, turn), {"h3"});
    }
  b.set_initial(initial);
  return b.build();
}

std::vector<int> toy_sites(const Arena& arena) {
  std::vector<int> site(arena.state_count());
  for (int s = 0; s < arena.state_count(); ++s)
    site[s] = arena.states()[s].id[1] - '0';  // ids look like "(2,A,circle)"
  return site;
}

Dfa dfa_of(const std::string& formula, const std::vector<std::string>& ap) {
  return translate_to_dfa(parse_scltl(formula), ap);
}

}  // namespace fixtures
