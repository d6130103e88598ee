#include "hypergames/oracle.hpp"

#include <algorithm>

#include "hypergames/errors.hpp"

namespace hypergames {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::good_prefix: return "good-prefix";
    case Verdict::not_yet: return "not-yet";
    case Verdict::dead: return "dead";
  }
  return "?";
}

namespace {

// Flattened syntax tree for the position-indexed satisfaction table.
struct FlatNode {
  FormulaKind kind;
  int bit = -1;       // Atom / NotAtom
  int a = -1, b = -1; // child indices
};

int flatten(const FormulaPtr& f, const std::unordered_map<std::string, int>& idx,
            std::vector<FlatNode>& out) {
  FlatNode n;
  n.kind = f->kind();
  switch (f->kind()) {
    case FormulaKind::True:
    case FormulaKind::False:
      break;
    case FormulaKind::Atom:
    case FormulaKind::NotAtom: {
      auto it = idx.find(f->atom_name());
      if (it == idx.end())
        throw model_error("oracle: atom '" + f->atom_name() +
                          "' is not a declared proposition");
      n.bit = it->second;
      break;
    }
    case FormulaKind::And:
    case FormulaKind::Or: {
      // chain the set-children into binary nodes
      int acc = flatten(f->children()[0], idx, out);
      for (size_t i = 1; i < f->children().size(); ++i) {
        int rhs = flatten(f->children()[i], idx, out);
        FlatNode link;
        link.kind = f->kind();
        link.a = acc;
        link.b = rhs;
        out.push_back(link);
        acc = static_cast<int>(out.size()) - 1;
      }
      return acc;
    }
    case FormulaKind::Next:
      n.a = flatten(f->next_body(), idx, out);
      break;
    case FormulaKind::Until:
      n.a = flatten(f->until_lhs(), idx, out);
      n.b = flatten(f->until_rhs(), idx, out);
      break;
  }
  out.push_back(n);
  return static_cast<int>(out.size()) - 1;
}

}  // namespace

bool strong_sat(const FormulaPtr& f, const std::vector<unsigned>& word,
                const std::vector<std::string>& ap) {
  std::unordered_map<std::string, int> idx;
  for (size_t i = 0; i < ap.size(); ++i) idx[ap[i]] = static_cast<int>(i);

  std::vector<FlatNode> nodes;
  int root = flatten(f, idx, nodes);

  const int n = static_cast<int>(word.size());
  // sat[k][i]: the subformula at node k holds strongly at position i. Filled
  // for i = n (past the end) down to 0; children precede parents in `nodes`.
  std::vector<std::vector<char>> sat(nodes.size(), std::vector<char>(n + 1, 0));
  for (int i = n; i >= 0; --i) {
    for (size_t k = 0; k < nodes.size(); ++k) {
      const FlatNode& nd = nodes[k];
      char v = 0;
      switch (nd.kind) {
        case FormulaKind::True:
          v = 1;
          break;
        case FormulaKind::False:
          v = 0;
          break;
        case FormulaKind::Atom:
          v = (i < n && (word[i] & (1u << nd.bit))) ? 1 : 0;
          break;
        case FormulaKind::NotAtom:
          v = (i < n && !(word[i] & (1u << nd.bit))) ? 1 : 0;
          break;
        case FormulaKind::And:
          v = sat[nd.a][i] && sat[nd.b][i];
          break;
        case FormulaKind::Or:
          v = sat[nd.a][i] || sat[nd.b][i];
          break;
        case FormulaKind::Next:
          v = (i + 1 <= n) ? sat[nd.a][i + 1] : 0;
          break;
        case FormulaKind::Until:
          // a witness for the right side now, or the left side holds now and
          // the Until holds strictly later within the word
          v = sat[nd.b][i] || (sat[nd.a][i] && i + 1 <= n && sat[k][i + 1]);
          break;
      }
      sat[k][i] = v;
    }
  }
  return sat[root][0] != 0;
}

HorizonOracle::HorizonOracle(const FormulaPtr& f,
                             const std::vector<std::string>& ap) {
  std::unordered_map<std::string, int> idx;
  for (size_t i = 0; i < ap.size(); ++i) idx[ap[i]] = static_cast<int>(i);
  std::vector<FlatNode> flat;
  root_ = flatten(f, idx, flat);
  nodes_.resize(flat.size());
  for (size_t k = 0; k < flat.size(); ++k) {
    nodes_[k].kind = flat[k].kind;
    nodes_[k].bit = flat[k].bit;
    nodes_[k].a = flat[k].a;
    nodes_[k].b = flat[k].b;
  }
}

int HorizonOracle::horizon(const unsigned* word, int n) const {
  const int inf = n + 1;
  const int width = n + 2;
  // h_[k * width + i]: smallest boundary m with i <= m <= n such that the
  // subformula at node k holds strongly at position i of word[0..m); inf when
  // none does. All connectives are monotone in the boundary, so minima
  // compose directly. Children precede parents, filled from i = n down to 0.
  h_.assign(nodes_.size() * width, inf);
  int* h = h_.data();
  for (int i = n; i >= 0; --i) {
    for (size_t k = 0; k < nodes_.size(); ++k) {
      const Node& nd = nodes_[k];
      int v = inf;
      switch (nd.kind) {
        case FormulaKind::True:
          v = i;
          break;
        case FormulaKind::False:
          break;
        case FormulaKind::Atom:
          if (i < n && (word[i] & (1u << nd.bit))) v = i + 1;
          break;
        case FormulaKind::NotAtom:
          if (i < n && !(word[i] & (1u << nd.bit))) v = i + 1;
          break;
        case FormulaKind::And:
          v = std::max(h[nd.a * width + i], h[nd.b * width + i]);
          break;
        case FormulaKind::Or:
          v = std::min(h[nd.a * width + i], h[nd.b * width + i]);
          break;
        case FormulaKind::Next:
          v = i + 1 <= n ? h[nd.a * width + i + 1] : inf;
          break;
        case FormulaKind::Until:
          v = std::min(h[nd.b * width + i],
                       std::max(h[nd.a * width + i],
                                i + 1 <= n ? h[k * width + i + 1] : inf));
          break;
      }
      h[k * width + i] = v;
    }
  }
  return h[root_ * width] >= inf ? -1 : h[root_ * width];
}

int good_prefix_horizon(const FormulaPtr& f, const std::vector<unsigned>& word,
                        const std::vector<std::string>& ap) {
  return HorizonOracle(f, ap).horizon(word);
}

Verdict oracle_verdict(const FormulaPtr& f, const std::vector<unsigned>& word,
                       const std::vector<std::string>& ap) {
  if (strong_sat(f, word, ap)) return Verdict::good_prefix;
  std::unordered_map<std::string, int> idx;
  for (size_t i = 0; i < ap.size(); ++i) idx[ap[i]] = static_cast<int>(i);
  FormulaPtr g = f;
  for (unsigned letter : word) {
    g = progress(g, letter, idx);
    if (g->is_false()) return Verdict::dead;
  }
  return Verdict::not_yet;
}

Verdict dfa_verdict(const Dfa& dfa, int q) {
  if (dfa.accepting[q]) return Verdict::good_prefix;
  if (q == dfa.sink) return Verdict::dead;
  return Verdict::not_yet;
}

}  // namespace hypergames
