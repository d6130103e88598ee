#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hypergames/arena.hpp"
#include "hypergames/errors.hpp"
#include "hypergames/json_io.hpp"
#include "support/fixtures.hpp"
#include "support/random_gen.hpp"

using namespace hypergames;

namespace {

ArenaBuilder two_state_skeleton() {
  ArenaBuilder b;
  b.add_state("u", Player::P1);
  b.add_state("v", Player::P2);
  b.add_action("go", Player::P1);
  b.add_action("back", Player::P2);
  b.add_transition("u", "go", "v");
  b.add_transition("v", "back", "u");
  b.set_initial("u");
  return b;
}

bool same_arena(const Arena& a, const Arena& b) {
  return arena_to_json(a) == arena_to_json(b);
}

}  // namespace

TEST_CASE("builder rejects unrepresentable references immediately") {
  ArenaBuilder b;
  b.add_state("u", Player::P1);
  b.add_action("go", Player::P1);
  CHECK_THROWS_AS(b.add_state("u", Player::P2), model_error);
  CHECK_THROWS_AS(b.add_action("go", Player::P1), model_error);
  CHECK_THROWS_AS(b.add_transition("nope", "go", "u"), model_error);
  CHECK_THROWS_AS(b.add_transition("u", "nope", "u"), model_error);
  CHECK_THROWS_AS(b.add_transition("u", "go", "nope"), model_error);
  CHECK_THROWS_AS(b.set_initial("nope"), model_error);
  CHECK_THROWS_AS(b.set_label("true", "nope", {}), model_error);
  b.set_ap({"p"});
  CHECK_THROWS_AS(b.set_label("true", "u", {"q"}), model_error);
  b.set_label("true", "u", {"p"});
  CHECK_THROWS_AS(b.set_ap({"p", "q"}), model_error);
}

TEST_CASE("structural violations are reported, not silently accepted") {
  SUBCASE("dead end") {
    ArenaBuilder b = two_state_skeleton();
    b.add_state("w", Player::P1);
    Arena a = b.build_unchecked();
    auto report = validate_arena(a);
    REQUIRE(report.size() == 1);
    CHECK(report[0].find("dead end") != std::string::npos);
    CHECK_THROWS_AS(b.build(), model_error);
  }
  SUBCASE("owner mismatch") {
    ArenaBuilder b = two_state_skeleton();
    b.add_transition("u", "back", "v");  // P2 action at a P1 state
    auto report = validate_arena(b.build_unchecked());
    REQUIRE(report.size() == 1);
    CHECK(report[0].find("owner") != std::string::npos);
  }
  SUBCASE("nondeterminism") {
    ArenaBuilder b = two_state_skeleton();
    b.add_transition("u", "go", "u");
    auto report = validate_arena(b.build_unchecked());
    REQUIRE(report.size() == 1);
    CHECK(report[0].find("two transitions") != std::string::npos);
  }
  SUBCASE("missing initial") {
    ArenaBuilder b;
    b.add_state("u", Player::P1);
    b.add_action("go", Player::P1);
    b.add_transition("u", "go", "u");
    auto report = validate_arena(b.build_unchecked());
    REQUIRE(report.size() == 1);
    CHECK(report[0].find("initial") != std::string::npos);
  }
  SUBCASE("several violations come back together") {
    ArenaBuilder b;
    b.add_state("u", Player::P1);
    CHECK(validate_arena(b.build_unchecked()).size() == 2);  // dead end + no initial
  }
}

TEST_CASE("labels are kept per perspective") {
  Arena toy = fixtures::toy_arena();
  REQUIRE(toy.has_perspective("true"));
  REQUIRE(toy.has_perspective("P2"));
  CHECK(!toy.has_perspective("P3"));
  CHECK(toy.ap() == std::vector<std::string>{"h2", "h3", "decoy"});

  int s2 = toy.state_index("(2,A,circle)");
  int s3 = toy.state_index("(3,B,square)");
  REQUIRE(s2 >= 0);
  REQUIRE(s3 >= 0);
  CHECK(toy.label_of(s2, "true") == std::vector<std::string>{"h2", "decoy"});
  CHECK(toy.label_of(s2, "P2") == std::vector<std::string>{"h2"});
  CHECK(toy.label_of(s3, "true") == std::vector<std::string>{"h3"});
  CHECK(toy.label_bits(s2, "true") == 0b101u);
  CHECK(toy.label_bits(s2, "P2") == 0b001u);
  CHECK(toy.label_bits(toy.state_index("(0,A,circle)"), "true") == 0u);
  CHECK_THROWS_AS(toy.label_bits(s2, "P3"), model_error);
}

TEST_CASE("successor lookup") {
  Arena toy = fixtures::toy_arena();
  int s = toy.state_index("(1,A,circle)");
  int to2 = toy.action_index("to-2");
  int to1 = toy.action_index("to-1");
  CHECK(toy.successor(s, to2) == toy.state_index("(2,A,square)"));
  CHECK_THROWS_AS(toy.successor(s, to1), model_error);
  CHECK(toy.enabled(s).size() == 2);
  CHECK(std::is_sorted(toy.enabled(s).begin(), toy.enabled(s).end()));
  CHECK(toy.state_index("missing") == -1);
  CHECK(toy.action_index("missing") == -1);
}

TEST_CASE("document round-trip preserves the arena") {
  Arena toy = fixtures::toy_arena();
  CHECK(same_arena(arena_from_json(arena_to_json(toy)), toy));

  std::mt19937_64 rng(11);
  for (int round = 0; round < 25; ++round) {
    Arena a = testgen::random_symmetric_arena(rng, 12, 3);
    CHECK(same_arena(arena_from_json(arena_to_json(a)), a));
  }
}

TEST_CASE("the shipped toy document matches the built fixture") {
  Arena filed = load_arena_file(fixtures::path("toy_ab.arena.json"));
  CHECK(same_arena(filed, fixtures::toy_arena()));
  CHECK(filed.states()[filed.initial()].id == "(0,A,circle)");
  CHECK(filed.state_count() == 16);
  CHECK(filed.action_count() == 6);
}

TEST_CASE("document loading is strict") {
  json doc = arena_to_json(fixtures::toy_arena());
  doc["extra"] = 1;
  CHECK_THROWS_AS(arena_from_json(doc), model_error);

  json doc2 = arena_to_json(fixtures::toy_arena());
  doc2["states"][0]["colour"] = "red";
  CHECK_THROWS_AS(arena_from_json(doc2), model_error);

  json doc3 = arena_to_json(fixtures::toy_arena());
  doc3.erase("initial");
  CHECK_THROWS_AS(arena_from_json(doc3), model_error);

  json doc4 = arena_to_json(fixtures::toy_arena());
  doc4["labels"]["true"]["(9,Z,circle)"] = json::array();
  CHECK_THROWS_AS(arena_from_json(doc4), model_error);

  CHECK_THROWS_AS(load_arena_file(fixtures::path("missing.json")), model_error);
}

TEST_CASE("random arenas pass validation by construction") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 40; ++round) {
    Arena a = testgen::random_symmetric_arena(rng, 15, 2);
    CHECK(validate_arena(a).empty());
    auto d = testgen::random_decoy_arena(rng, 15, 2);
    CHECK(validate_arena(d.arena).empty());
    // the attacker view never carries the decoy bit
    int bit = static_cast<int>(d.arena.ap().size()) - 1;
    REQUIRE(d.arena.ap()[bit] == "decoy");
    for (int s = 0; s < d.arena.state_count(); ++s) {
      CHECK((d.arena.label_bits(s, "P2") >> bit) == 0u);
      bool is_decoy = std::find(d.decoy_sites.begin(), d.decoy_sites.end(), s) !=
                      d.decoy_sites.end();
      CHECK(((d.arena.label_bits(s, "true") >> bit) & 1u) == (is_decoy ? 1u : 0u));
    }
  }
}
