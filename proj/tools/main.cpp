// Command-line front end: translate objectives, solve products, synthesize
// deceptive strategies, compile network models, explore the repeated game,
// export DOT, and play out a synthesized strategy interactively.

#include <algorithm>
#include <bit>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypergames/arena.hpp"
#include "hypergames/dfa.hpp"
#include "hypergames/dot.hpp"
#include "hypergames/dynamic.hpp"
#include "hypergames/errors.hpp"
#include "hypergames/formula.hpp"
#include "hypergames/hypergame.hpp"
#include "hypergames/json_io.hpp"
#include "hypergames/netmodel.hpp"
#include "hypergames/parser.hpp"
#include "hypergames/product.hpp"
#include "hypergames/solver.hpp"

using namespace hypergames;

namespace {

struct Options {
  std::string input;
  std::string formula;
  std::string dfa_path;
  std::string perspective = "true";
  std::string owner;
  std::string out;
  std::string dot;
  std::size_t cap_states = 0;  // 0 keeps each module's default
  unsigned long long seed = 0;
  int rounds = -1;
  std::string play;
  std::string role = "attacker";
};

std::size_t cap_or(const Options& o, std::size_t dflt) {
  return o.cap_states ? o.cap_states : dflt;
}

Player owner_or(const Options& o, Player dflt) {
  return o.owner.empty() ? dflt : player_from_string(o.owner);
}

Dfa objective_dfa(const Options& o, const std::vector<std::string>& ap) {
  if (!o.dfa_path.empty()) return load_dfa_file(o.dfa_path);
  return translate_to_dfa(parse_scltl(o.formula), ap, cap_or(o, 1000000));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw model_error("cannot open " + path + " for writing");
  out << text;
}

int count(const std::vector<char>& v) {
  return static_cast<int>(std::count(v.begin(), v.end(), char(1)));
}

std::vector<std::string> named_region(const GameGraph& g, const std::vector<char>& region) {
  std::vector<std::string> out;
  for (int i = 0; i < g.state_count(); ++i)
    if (region[i]) out.push_back(g.state_name[i]);
  return out;
}

json strategy_json(const GameGraph& g, const PositionalStrategy& strategy) {
  json j = json::object();
  for (int i = 0; i < g.state_count(); ++i)
    if (strategy.defined_at(i)) j[g.state_name[i]] = g.action_name[strategy.action[i]];
  return j;
}

int cmd_translate(const Options& o) {
  FormulaPtr f = parse_scltl(o.formula);
  auto atoms = collect_atoms(f);
  std::vector<std::string> ap(atoms.begin(), atoms.end());
  if (ap.empty()) ap.push_back("p0");  // constant formulas still need an alphabet
  Dfa dfa = translate_to_dfa(f, ap, cap_or(o, 1000000));
  int finals = 0;
  for (char a : dfa.accepting) finals += a != 0;
  std::cout << "dfa: " << dfa.state_count() << " states, " << dfa.letter_count()
            << " letters, " << finals << " accepting, initial " << dfa.state_name[dfa.initial]
            << "\n";
  json doc = dfa_to_json(dfa);
  if (!o.out.empty())
    save_json_file(o.out, doc);
  else
    std::cout << doc.dump(2) << "\n";
  if (!o.dot.empty()) write_text(o.dot, dfa_to_dot(dfa));
  return 0;
}

int cmd_solve(const Options& o) {
  Arena arena = load_arena_file(o.input);
  Dfa dfa = objective_dfa(o, arena.ap());
  Player reach = owner_or(o, Player::P2);
  ProductGame pg = build_product(arena, dfa, o.perspective);
  WinningAnalysis a = sure_winning_regions(pg.graph, reach, pg.final_state);

  const std::vector<char>& defender = reach == Player::P1 ? a.win_reach : a.win_safe;
  const std::vector<char>& attacker = reach == Player::P2 ? a.win_reach : a.win_safe;
  std::cout << "product: " << pg.state_count() << " states over arena " << arena.state_count()
            << ", perspective " << o.perspective << "\n";
  std::cout << "defender winning region: " << count(defender) << " states\n";
  std::cout << "attacker winning region: " << count(attacker) << " states\n";
  std::cout << "initial state: " << (defender[pg.initial] ? "defender" : "attacker")
            << "-winning\n";

  PositionalStrategy pos_reach = positional_strategy(pg.graph, a, reach);
  if (!o.out.empty()) {
    auto permissive = permissive_strategy(pg.graph, a, reach);
    json perm = json::object();
    for (int i = 0; i < pg.state_count(); ++i)
      if (!permissive[i].empty()) {
        json acts = json::array();
        for (int act : permissive[i]) acts.push_back(pg.graph.action_name[act]);
        perm[pg.graph.state_name[i]] = acts;
      }
    PositionalStrategy pos_safe = positional_strategy(pg.graph, a, opponent(reach));
    json doc = {{"reach_player", to_string(reach)},
                {"regions",
                 {{"defender", named_region(pg.graph, defender)},
                  {"attacker", named_region(pg.graph, attacker)}}},
                {"positional",
                 {{to_string(reach), strategy_json(pg.graph, pos_reach)},
                  {to_string(opponent(reach)), strategy_json(pg.graph, pos_safe)}}},
                {"permissive", {{to_string(reach), perm}}}};
    save_json_file(o.out, doc);
  }
  if (!o.dot.empty()) write_text(o.dot, product_to_dot(pg, &pos_reach));
  return 0;
}

int cmd_synth(const Options& o) {
  Arena arena = load_arena_file(o.input);
  Dfa dfa = objective_dfa(o, arena.ap());
  Player owner = owner_or(o, Player::P1);
  SynthesisResult syn = synthesize_deception(arena, dfa, owner);

  std::cout << "hypergame: " << syn.hg.state_count() << " states, "
            << count(syn.hg.divergence()) << " divergence\n";
  std::cout << "deceptive winning region: " << count(syn.deception.region) << " states\n";
  std::cout << "symmetric-information region: " << count(syn.hg.target()) << " states\n";
  std::cout << "initial state: "
            << (syn.deception.region[syn.hg.initial()] ? "deceptively winning"
                                                       : "not deceptively winning")
            << "\n";
  if (syn.stealth_report.empty())
    std::cout << "stealthiness: ok\n";
  else {
    std::cout << "stealthiness: " << syn.stealth_report.size() << " violations\n";
    for (const auto& v : syn.stealth_report) std::cout << "  " << v << "\n";
  }

  if (!o.out.empty()) {
    json doc = {{"objective_owner", to_string(owner)},
                {"deceptive_region", named_region(syn.hg.graph(), syn.deception.region)},
                {"strategy", strategy_json(syn.hg.graph(), syn.deception.strategy)},
                {"partition",
                 {{"defender_sure", count(syn.partition.defender_sure)},
                  {"misperceived_losing", count(syn.partition.misperceived_losing)},
                  {"perceived_and_winning", count(syn.partition.perceived_and_winning)}}},
                {"stealth_violations", syn.stealth_report}};
    save_json_file(o.out, doc);
  }
  if (!o.dot.empty()) write_text(o.dot, hypergame_to_dot(syn.hg, &syn.deception.strategy));
  return 0;
}

int cmd_compile(const Options& o) {
  NetworkModel net = load_network_file(o.input);
  CompiledNetwork cn = compile_network(net, cap_or(o, 2000000));
  std::size_t transitions = 0;
  for (int s = 0; s < cn.arena.state_count(); ++s) transitions += cn.arena.enabled(s).size();
  std::cout << "network: " << net.hosts.size() << " hosts, " << net.vulns.size() << " vulns, "
            << net.topologies.size() << " topologies, " << net.decoys.size() << " decoys\n";
  std::cout << "arena: " << cn.arena.state_count() << " states, " << cn.arena.action_count()
            << " actions, " << transitions << " transitions\n";
  json doc = arena_to_json(cn.arena);
  if (!o.out.empty())
    save_json_file(o.out, doc);
  else
    std::cout << doc.dump(2) << "\n";
  if (!o.dot.empty()) write_text(o.dot, arena_to_dot(cn.arena, o.perspective));
  return 0;
}

int cmd_dynamic(const Options& o) {
  NetworkModel net = load_network_file(o.input);
  CompiledNetwork cn = compile_network(net, cap_or(o, 2000000));
  LabelingFamily fam = labeling_family_of(cn);
  Player owner = owner_or(o, Player::P1);

  Dfa dfa;
  if (!o.dfa_path.empty()) {
    dfa = load_dfa_file(o.dfa_path);
  } else {
    std::string formula = o.formula;
    if (formula.empty())
      formula = owner == Player::P1 ? net.objective_defender : net.objective_attacker;
    if (formula.empty())
      throw model_error("dynamic: the document declares no objective for " + to_string(owner) +
                        " and no --formula was given");
    dfa = translate_to_dfa(parse_scltl(formula), cn.arena.ap(), cap_or(o, 1000000));
  }

  DynGame game =
      build_dynamic_hypergame(cn.arena, dfa, fam, owner, o.rounds, cap_or(o, 2000000));
  DynSolution sol = solve_repeated(game);

  std::cout << "dynamic game: " << game.state_count() << " states, discovery budget "
            << game.max_discoveries() << "\n";
  std::map<int, std::pair<int, int>> by_d;
  for (int i = 0; i < game.state_count(); ++i) {
    auto& bucket = by_d[std::popcount(game.states()[i].dmask)];
    ++bucket.first;
    bucket.second += sol.region[i] != 0;
  }
  for (const auto& [k, bucket] : by_d)
    std::cout << "  |D|=" << k << ": " << bucket.first << " states, " << bucket.second
              << " defender-winning\n";
  bool win = sol.region[game.initial()] != 0;
  std::cout << "repeated interaction: defender " << (win ? "wins" : "does not win")
            << " from the initial state\n";

  if (!o.out.empty()) {
    json doc = {{"states", game.state_count()},
                {"discovery_budget", game.max_discoveries()},
                {"region", named_region(game.graph(), sol.region)},
                {"strategy", strategy_json(game.graph(), sol.strategy)},
                {"initial_winning", win}};
    save_json_file(o.out, doc);
  }
  return 0;
}

enum class DocKind { arena, dfa, network };

DocKind sniff(const json& doc) {
  if (!doc.is_object()) throw model_error("unrecognized document: expected an object");
  if (doc.contains("hosts")) return DocKind::network;
  if (doc.contains("finals")) return DocKind::dfa;
  if (doc.contains("actions")) return DocKind::arena;
  throw model_error("unrecognized document: expected an arena, automaton, or network");
}

int cmd_export_dot(const Options& o) {
  json doc = load_json_file(o.input);
  std::string dot;
  switch (sniff(doc)) {
    case DocKind::arena:
      dot = arena_to_dot(arena_from_json(doc), o.perspective);
      break;
    case DocKind::dfa:
      dot = dfa_to_dot(dfa_from_json(doc));
      break;
    case DocKind::network:
      dot = arena_to_dot(compile_arena(load_network(doc), cap_or(o, 2000000)), o.perspective);
      break;
  }
  if (!o.out.empty())
    write_text(o.out, dot);
  else
    std::cout << dot;
  return 0;
}

int cmd_stats(const Options& o) {
  json doc = load_json_file(o.input);
  switch (sniff(doc)) {
    case DocKind::arena: {
      Arena arena = arena_from_json(doc);
      int p1 = 0;
      std::size_t transitions = 0;
      for (int s = 0; s < arena.state_count(); ++s) {
        p1 += arena.states()[s].owner == Player::P1;
        transitions += arena.enabled(s).size();
      }
      std::cout << "arena: " << arena.state_count() << " states (" << p1 << " defender, "
                << arena.state_count() - p1 << " attacker), " << arena.action_count()
                << " actions, " << transitions << " transitions, " << arena.ap().size()
                << " props\n";
      std::cout << "perspectives:";
      for (const auto& p : arena.perspectives()) std::cout << " " << p;
      std::cout << "\n";
      break;
    }
    case DocKind::dfa: {
      Dfa dfa = dfa_from_json(doc);
      int finals = 0;
      for (char a : dfa.accepting) finals += a != 0;
      std::cout << "dfa: " << dfa.state_count() << " states, " << dfa.letter_count()
                << " letters, " << finals << " accepting\n";
      break;
    }
    case DocKind::network: {
      NetworkModel net = load_network(doc);
      std::cout << "network: " << net.hosts.size() << " hosts, " << net.vulns.size()
                << " vulns, " << net.topologies.size() << " topologies, " << net.decoys.size()
                << " decoys\n";
      break;
    }
  }
  return 0;
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

int cmd_simulate(const Options& o) {
  Arena arena = load_arena_file(o.input);
  Dfa dfa = objective_dfa(o, arena.ap());
  Player owner = owner_or(o, Player::P1);
  SynthesisResult syn = synthesize_deception(arena, dfa, owner);
  const Hypergame& hg = syn.hg;
  const GameGraph& g = hg.graph();

  bool human_is_attacker = o.role != "defender" && o.role != "P1";
  std::vector<std::string> script = split_tokens(o.play);
  std::size_t next_script = 0;
  std::mt19937_64 rng(o.seed);

  std::cout << "simulate: human plays " << (human_is_attacker ? "attacker" : "defender")
            << ", objective owner " << to_string(owner) << "\n";
  int cur = hg.initial();
  if (!syn.deception.region[cur]) std::cout << "out of region\n";

  int decoy_prop = -1;
  for (std::size_t i = 0; i < arena.ap().size(); ++i)
    if (arena.ap()[i] == "decoy") decoy_prop = static_cast<int>(i);

  for (int step = 0; step < 10000; ++step) {
    std::cout << "state: " << g.state_name[cur] << (hg.divergence()[cur] ? " [divergence]" : "")
              << "\n";
    if (hg.target()[cur]) {
      auto st = hg.states()[cur];
      bool on_decoy = decoy_prop >= 0 && (arena.label_bits(st.s, "true") >> decoy_prop & 1u);
      bool accepted = hg.true_product().final_state[hg.true_product().index_of(st.s, st.q)];
      if (on_decoy) std::cout << "decoy reached; ";
      std::cout << (accepted ? "defender objective satisfied"
                             : "defender sure-winning region reached")
                << "\n";
      return 0;
    }
    bool humans_turn = (g.owner[cur] == Player::P2) == human_is_attacker;
    const auto& edges = g.edges[cur];
    int chosen = -1;
    if (humans_turn) {
      std::cout << "enabled:";
      for (std::size_t i = 0; i < edges.size(); ++i)
        std::cout << " [" << i << "] " << g.action_name[edges[i].first];
      std::cout << "\n";
      while (chosen < 0) {
        std::cout << "> " << std::flush;
        std::string token;
        if (next_script < script.size()) {
          token = script[next_script++];
          std::cout << token << "\n";
        } else if (!(std::cin >> token)) {
          std::cout << "session ended\n";
          return 0;
        }
        if (token == "?") {
          chosen = static_cast<int>(rng() % edges.size());
          break;
        }
        for (std::size_t i = 0; i < edges.size(); ++i)
          if (g.action_name[edges[i].first] == token || std::to_string(i) == token)
            chosen = static_cast<int>(i);
        if (chosen < 0) std::cout << "unknown action, try again\n";
      }
    } else if (g.owner[cur] == Player::P1 && syn.deception.strategy.defined_at(cur)) {
      int act = syn.deception.strategy.action[cur];
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].first == act) chosen = static_cast<int>(i);
      std::cout << "tool plays " << g.action_name[act] << "\n";
    }
    if (chosen < 0) {
      // no strategy here (or attacker tool side): smallest action, best effort
      if (g.owner[cur] == Player::P1 && !humans_turn) std::cout << "out of region\n";
      chosen = 0;
      if (!humans_turn) std::cout << "tool plays " << g.action_name[edges[0].first] << "\n";
    }
    cur = edges[chosen].second;
  }
  std::cout << "step limit reached\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deceptive defense synthesis on two-player graph games"};
  app.require_subcommand(1);
  Options o;

  auto add_objective = [&](CLI::App* cmd, int min_needed) {
    auto* grp = cmd->add_option_group("objective");
    grp->add_option("--formula", o.formula, "co-safe LTL objective");
    grp->add_option("--dfa", o.dfa_path, "explicit automaton document")
        ->check(CLI::ExistingFile);
    grp->require_option(min_needed, 1);
    return grp;
  };
  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--cap-states", o.cap_states, "state cap for generated structures")
        ->check(CLI::PositiveNumber);
  };
  auto add_owner = [&](CLI::App* cmd) {
    cmd->add_option("--owner", o.owner, "objective owner")
        ->check(CLI::IsMember({"P1", "P2", "defender", "attacker"}));
  };

  auto* translate = app.add_subcommand("translate", "formula to good-prefix automaton");
  translate->add_option("--formula,formula", o.formula, "co-safe LTL objective")->required();
  translate->add_option("--out", o.out, "automaton document path");
  translate->add_option("--dot", o.dot, "DOT output path");
  add_cap(translate);
  translate->callback([&] { cmd_translate(o); });

  auto* solve = app.add_subcommand("solve", "winning regions and strategies of a product");
  solve->add_option("input", o.input, "arena document")->required()->check(CLI::ExistingFile);
  add_objective(solve, 1);
  solve->add_option("--perspective", o.perspective, "labeling perspective (default true)");
  add_owner(solve);
  solve->add_option("--out", o.out, "result document path");
  solve->add_option("--dot", o.dot, "DOT output path");
  add_cap(solve);
  solve->callback([&] { cmd_solve(o); });

  auto* synth = app.add_subcommand("synth", "deceptive sure-winning synthesis");
  synth->add_option("input", o.input, "arena document")->required()->check(CLI::ExistingFile);
  add_objective(synth, 1);
  add_owner(synth);
  synth->add_option("--out", o.out, "result document path");
  synth->add_option("--dot", o.dot, "DOT output path");
  add_cap(synth);
  synth->callback([&] { cmd_synth(o); });

  auto* compile = app.add_subcommand("compile", "network document to arena");
  compile->add_option("input", o.input, "network document")
      ->required()
      ->check(CLI::ExistingFile);
  compile->add_option("--out", o.out, "arena document path");
  compile->add_option("--dot", o.dot, "DOT output path");
  compile->add_option("--perspective", o.perspective, "perspective for DOT labels");
  add_cap(compile);
  compile->callback([&] { cmd_compile(o); });

  auto* dynamic = app.add_subcommand("dynamic", "repeated interaction with decoy discovery");
  dynamic->add_option("input", o.input, "network document")
      ->required()
      ->check(CLI::ExistingFile);
  add_objective(dynamic, 0);
  add_owner(dynamic);
  dynamic->add_option("--rounds", o.rounds, "discovery budget (default: all decoys)");
  dynamic->add_option("--out", o.out, "result document path");
  add_cap(dynamic);
  dynamic->callback([&] { cmd_dynamic(o); });

  auto* simulate = app.add_subcommand("simulate", "play out a synthesized strategy");
  simulate->add_option("input", o.input, "arena document")
      ->required()
      ->check(CLI::ExistingFile);
  add_objective(simulate, 1);
  add_owner(simulate);
  simulate->add_option("--role", o.role, "human side: attacker (default) or defender")
      ->check(CLI::IsMember({"attacker", "defender", "P1", "P2"}));
  simulate->add_option("--play", o.play, "scripted moves, comma or space separated");
  simulate->add_option("--seed", o.seed, "seed for '?' random moves");
  add_cap(simulate);
  simulate->callback([&] { cmd_simulate(o); });

  auto* export_dot = app.add_subcommand("export-dot", "DOT for an arena, automaton, or network");
  export_dot->add_option("input", o.input, "document path")
      ->required()
      ->check(CLI::ExistingFile);
  export_dot->add_option("--out", o.out, "DOT output path");
  export_dot->add_option("--perspective", o.perspective, "perspective for labels");
  add_cap(export_dot);
  export_dot->callback([&] { cmd_export_dot(o); });

  auto* stats = app.add_subcommand("stats", "size summary of a document");
  stats->add_option("input", o.input, "document path")->required()->check(CLI::ExistingFile);
  stats->callback([&] { cmd_stats(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const cap_exceeded_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const model_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
