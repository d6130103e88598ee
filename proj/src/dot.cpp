#include "hypergames/dot.hpp"

#include <sstream>

namespace hypergames {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string shape_of(Player p) { return p == Player::P2 ? "circle" : "box"; }

void node_line(std::ostream& os, const std::string& id, const std::string& label, Player owner,
               bool final_state, bool shaded) {
  os << "  " << quoted(id) << " [shape=" << shape_of(owner);
  if (final_state) os << ", peripheries=2";
  if (shaded) os << ", style=filled, fillcolor=lightpink";
  if (!label.empty()) os << ", label=" << quoted(label);
  os << "];\n";
}

}  // namespace

std::string arena_to_dot(const Arena& arena, const std::string& perspective) {
  std::ostringstream os;
  os << "digraph arena {\n  rankdir=LR;\n";
  for (int s = 0; s < arena.state_count(); ++s) {
    const auto& st = arena.states()[s];
    std::string label = st.id;
    auto props = arena.label_of(s, perspective);
    if (!props.empty()) {
      label += "\n{";
      for (size_t i = 0; i < props.size(); ++i) label += (i ? "," : "") + props[i];
      label += "}";
    }
    node_line(os, st.id, label, st.owner, false, false);
  }
  os << "  __init [shape=point];\n  __init -> "
     << quoted(arena.states()[arena.initial()].id) << ";\n";
  for (int s = 0; s < arena.state_count(); ++s)
    for (const auto& [a, t] : arena.enabled(s))
      os << "  " << quoted(arena.states()[s].id) << " -> " << quoted(arena.states()[t].id)
         << " [label=" << quoted(arena.actions()[a].id) << "];\n";
  os << "}\n";
  return os.str();
}

std::string dfa_to_dot(const Dfa& dfa) {
  std::ostringstream os;
  os << "digraph dfa {\n  rankdir=LR;\n";
  for (int q = 0; q < dfa.state_count(); ++q) {
    os << "  " << quoted(dfa.state_name[q]) << " [shape=circle";
    if (dfa.accepting[q]) os << ", peripheries=2";
    os << "];\n";
  }
  os << "  __init [shape=point];\n  __init -> " << quoted(dfa.state_name[dfa.initial]) << ";\n";
  // group parallel edges by (from,to) listing their letters
  for (int q = 0; q < dfa.state_count(); ++q) {
    std::vector<std::string> byto(dfa.state_count());
    for (int letter = 0; letter < dfa.letter_count(); ++letter) {
      auto props = dfa.props_of(static_cast<unsigned>(letter));
      std::string cell = "{";
      for (size_t i = 0; i < props.size(); ++i) cell += (i ? "," : "") + props[i];
      cell += "}";
      std::string& acc = byto[dfa.delta[q][letter]];
      acc += (acc.empty() ? "" : " ") + cell;
    }
    for (int t = 0; t < dfa.state_count(); ++t)
      if (!byto[t].empty())
        os << "  " << quoted(dfa.state_name[q]) << " -> " << quoted(dfa.state_name[t])
           << " [label=" << quoted(byto[t]) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string product_to_dot(const ProductGame& pg, const PositionalStrategy* strategy) {
  std::ostringstream os;
  os << "digraph product {\n  rankdir=LR;\n";
  for (int i = 0; i < pg.state_count(); ++i)
    node_line(os, pg.graph.state_name[i], pg.graph.state_name[i], pg.graph.owner[i],
              pg.final_state[i], false);
  os << "  __init [shape=point];\n  __init -> " << quoted(pg.graph.state_name[pg.initial])
     << ";\n";
  for (int i = 0; i < pg.state_count(); ++i)
    for (const auto& [a, t] : pg.graph.edges[i]) {
      bool chosen = strategy && strategy->defined_at(i) && strategy->action[i] == a;
      os << "  " << quoted(pg.graph.state_name[i]) << " -> " << quoted(pg.graph.state_name[t])
         << " [label=" << quoted(pg.graph.action_name[a]);
      if (chosen) os << ", style=dashed, color=red";
      os << "];\n";
    }
  os << "}\n";
  return os.str();
}

std::string hypergame_to_dot(const Hypergame& hg, const PositionalStrategy* strategy) {
  std::ostringstream os;
  os << "digraph hypergame {\n  rankdir=LR;\n";
  for (int i = 0; i < hg.state_count(); ++i)
    node_line(os, hg.graph().state_name[i], hg.graph().state_name[i], hg.graph().owner[i],
              hg.target()[i], hg.divergence()[i]);
  os << "  __init [shape=point];\n  __init -> "
     << quoted(hg.graph().state_name[hg.initial()]) << ";\n";
  for (int i = 0; i < hg.state_count(); ++i)
    for (const auto& [a, t] : hg.graph().edges[i]) {
      bool chosen = strategy && strategy->defined_at(i) && strategy->action[i] == a;
      os << "  " << quoted(hg.graph().state_name[i]) << " -> "
         << quoted(hg.graph().state_name[t]) << " [label=" << quoted(hg.graph().action_name[a]);
      if (chosen) os << ", style=dashed, color=red";
      os << "];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace hypergames
