#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include "hypergames/json_io.hpp"
#include "support/fixtures.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(HGS_BIN) + " " + args + " < /dev/null 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string q(const std::string& s) { return "'" + s + "'"; }

std::string tmp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() /
             ("hgs_cli_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

const std::string toy = fixtures::path("toy_ab.arena.json");
const std::string net = fixtures::path("toy_ab.net.json");

}  // namespace

TEST_CASE("exit codes separate usage, model, and budget failures") {
  CHECK(run("").code == 1);
  CHECK(run("--help").code == 0);
  CHECK(run("translate").code == 1);
  CHECK(run("solve " + toy).code == 1);  // an objective is required
  CHECK(run("solve " + toy + " --formula 'F h3' --dfa " + toy).code == 1);  // but only one

  RunResult bad = run("translate " + q("!(a U b)"));
  CHECK(bad.code == 2);
  CHECK(has(bad.out, "co-safety violation"));

  CHECK(run("translate 'F h3' --cap-states 1").code == 3);
  CHECK(run("solve " + net + " --formula 'F h3'").code == 2);  // wrong document kind
}

TEST_CASE("translate reports the automaton and can persist it") {
  RunResult r = run("translate 'F h3'");
  CHECK(r.code == 0);
  CHECK(has(r.out, "dfa: 2 states, 2 letters, 1 accepting, initial q0"));
  CHECK(has(r.out, "\"finals\""));

  std::string out = tmp_path("nested.dfa.json");
  RunResult w = run("translate " + q("F(h2 && F h3)") + " --out " + out);
  CHECK(w.code == 0);
  CHECK(has(w.out, "dfa: 3 states"));
  hypergames::Dfa d = hypergames::load_dfa_file(out);
  CHECK(d.state_count() == 3);
}

TEST_CASE("solve announces both regions and the initial verdict") {
  RunResult hopeless = run("solve " + toy + " --formula 'F h3'");
  CHECK(hopeless.code == 0);
  CHECK(has(hopeless.out, "defender winning region: 0 states"));
  CHECK(has(hopeless.out, "initial state: attacker-winning"));

  RunResult guarded = run("solve " + toy + " --formula " + q("!decoy U h3"));
  CHECK(guarded.code == 0);
  CHECK(has(guarded.out, "initial state: defender-winning"));

  // through the attacker's decoy-blind view the same objective looks free
  RunResult blind =
      run("solve " + toy + " --formula " + q("!decoy U h3") + " --perspective P2");
  CHECK(blind.code == 0);
  CHECK(has(blind.out, "initial state: attacker-winning"));
}

TEST_CASE("solve accepts a matching automaton document and rejects a foreign one") {
  std::string foreign = tmp_path("foreign.dfa.json");
  CHECK(run("translate 'F a' --out " + foreign).code == 0);
  CHECK(run("solve " + toy + " --dfa " + foreign).code == 2);

  std::string matching = tmp_path("matching.dfa.json");
  hypergames::save_json_file(
      matching, hypergames::dfa_to_json(fixtures::dfa_of("F h3", {"h2", "h3", "decoy"})));
  RunResult r = run("solve " + toy + " --dfa " + matching);
  CHECK(r.code == 0);
  CHECK(has(r.out, "defender winning region: 0 states"));
}

TEST_CASE("solve writes a result document and behaves deterministically") {
  std::string out = tmp_path("solve.json");
  RunResult a = run("solve " + toy + " --formula 'F h3' --out " + out);
  CHECK(a.code == 0);
  auto doc = hypergames::load_json_file(out);
  CHECK(doc["regions"]["defender"].size() == 0);
  CHECK(doc["regions"]["attacker"].size() > 0);
  CHECK(doc.contains("positional"));

  RunResult b = run("solve " + toy + " --formula 'F h3' --out " + out);
  CHECK(a.out == b.out);
}

TEST_CASE("synth reports the deceptive region and stealth") {
  RunResult r = run("synth " + toy + " --formula " + q("!h3 U decoy"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "hypergame: "));
  CHECK(has(r.out, "deceptive winning region: "));
  CHECK(has(r.out, "symmetric-information region: "));
  CHECK(has(r.out, "initial state: deceptively winning"));
  CHECK(has(r.out, "stealthiness: ok"));

  std::string dot = tmp_path("hg.dot");
  CHECK(run("synth " + toy + " --formula " + q("!h3 U decoy") + " --dot " + dot).code == 0);
  std::ifstream in(dot);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(has(text, "digraph"));
}

TEST_CASE("compile feeds the rest of the pipeline") {
  std::string arena_doc = tmp_path("walk.arena.json");
  RunResult c = run("compile " + net + " --out " + arena_doc);
  CHECK(c.code == 0);
  CHECK(has(c.out, "network: 4 hosts, 1 vulns, 2 topologies, 1 decoys"));
  CHECK(has(c.out, "arena: "));

  RunResult s = run("solve " + arena_doc + " --formula 'F p3'");
  CHECK(s.code == 0);
  CHECK(has(s.out, "defender winning region: 0 states"));

  RunResult y =
      run("synth " + arena_doc + " --formula " + q("!p3 U decoy") + " --owner defender");
  CHECK(y.code == 0);
  CHECK(has(y.out, "stealthiness: ok"));
}

TEST_CASE("dynamic plays the network across rounds") {
  RunResult r = run("dynamic " + net);
  CHECK(r.code == 0);
  CHECK(has(r.out, "dynamic game: "));
  CHECK(has(r.out, "discovery budget 1"));
  CHECK(has(r.out, "  |D|=0: "));
  // its objective satisfies itself the moment a decoy is entered, so the
  // discovery layer never materializes
  CHECK(!has(r.out, "|D|=1"));
  // and the attacker can stall on her skip move forever
  CHECK(has(r.out, "repeated interaction: defender does not win from the initial state"));

  RunResult parked = run("dynamic " + net + " --rounds 0");
  CHECK(parked.code == 0);
  CHECK(has(parked.out, "discovery budget 0"));
}

TEST_CASE("simulate walks a scripted attacker into the trap") {
  // start the walk one step in, where the defender is not yet sure-winning
  auto doc = hypergames::load_json_file(toy);
  doc["initial"] = "(1,A,circle)";
  std::string tweaked = tmp_path("midwalk.arena.json");
  hypergames::save_json_file(tweaked, doc);

  RunResult r =
      run("simulate " + tweaked + " --formula " + q("!h3 U decoy") + " --play to-2");
  CHECK(r.code == 0);
  CHECK(has(r.out, "out of region"));
  CHECK(has(r.out, "[divergence]"));
  CHECK(has(r.out, "decoy reached; defender objective satisfied"));

  RunResult retry = run("simulate " + tweaked + " --formula " + q("!h3 U decoy") +
                        " --play " + q("fly to-2"));
  CHECK(retry.code == 0);
  CHECK(has(retry.out, "unknown action, try again"));
  CHECK(has(retry.out, "decoy reached; defender objective satisfied"));
}

TEST_CASE("simulate ends politely when the script and stdin run dry") {
  RunResult r = run("simulate " + toy + " --formula " + q("F(h2 && F h3)") + " --owner P2");
  CHECK(r.code == 0);
  CHECK(has(r.out, "out of region"));
  CHECK(has(r.out, "session ended"));
}

TEST_CASE("simulate recognizes a start that is already won") {
  RunResult r = run("simulate " + toy + " --formula 'F h3' --owner P1");
  CHECK(r.code == 0);
  CHECK(has(r.out, "defender sure-winning region reached"));
  CHECK(!has(r.out, "decoy reached"));
}

TEST_CASE("simulate accepts random moves from the seeded helper") {
  RunResult r = run("simulate " + toy + " --formula 'F h3' --owner P2 --role defender" +
                    " --play '?' --seed 7");
  CHECK(r.code == 0);
  CHECK(has(r.out, "tool plays"));
  CHECK(has(r.out, "session ended"));
}

TEST_CASE("export-dot covers all three document kinds") {
  std::string dfa_doc = tmp_path("export.dfa.json");
  CHECK(run("translate 'F h3' --out " + dfa_doc).code == 0);
  for (const std::string& input : {toy, net, dfa_doc}) {
    RunResult r = run("export-dot " + input);
    CHECK(r.code == 0);
    CHECK(has(r.out, "digraph"));
  }
}

TEST_CASE("stats summarizes all three document kinds") {
  RunResult a = run("stats " + toy);
  CHECK(a.code == 0);
  CHECK(has(a.out, "arena: 16 states (8 defender, 8 attacker), 6 actions, 25 transitions"));
  CHECK(has(a.out, "perspectives: true P2"));

  std::string dfa_doc = tmp_path("stats.dfa.json");
  CHECK(run("translate " + q("F(h2 && F h3)") + " --out " + dfa_doc).code == 0);
  RunResult d = run("stats " + dfa_doc);
  CHECK(d.code == 0);
  CHECK(has(d.out, "dfa: 3 states"));

  RunResult n = run("stats " + net);
  CHECK(n.code == 0);
  CHECK(has(n.out, "network: 4 hosts, 1 vulns, 2 topologies, 1 decoys"));
}
