#include "hypergames/dfa.hpp"

#include <algorithm>
#include <deque>

#include "hypergames/errors.hpp"

namespace hypergames {

namespace {

// Progression keeps wrapping states in fresh `keep && (done || ...)` layers, so
// raw keys never repeat on nested Untils. Flattening every state into an
// irredundant disjunction of conjunctions over non-boolean units fixes that:
// units only come from the finite set of subformulas, so the translation must
// converge.

using Clause = std::vector<FormulaPtr>;  // conjuncts, sorted by key, unique

void add_unit(Clause& c, const FormulaPtr& u) {
  auto at = std::lower_bound(
      c.begin(), c.end(), u,
      [](const FormulaPtr& a, const FormulaPtr& b) { return a->key() < b->key(); });
  if (at != c.end() && (*at)->key() == u->key()) return;
  c.insert(at, u);
}

bool clause_contradicts(const Clause& c) {
  for (const auto& u : c)
    if (u->kind() == FormulaKind::NotAtom)
      for (const auto& v : c)
        if (v->kind() == FormulaKind::Atom && v->atom_name() == u->atom_name()) return true;
  return false;
}

// true if every conjunct of `small` occurs in `big` (both sorted)
bool clause_subsumes(const Clause& small, const Clause& big) {
  size_t i = 0;
  for (const auto& u : big) {
    if (i == small.size()) break;
    if (small[i]->key() == u->key()) ++i;
  }
  return i == small.size();
}

std::vector<Clause> clauses_of(const FormulaPtr& f) {
  switch (f->kind()) {
    case FormulaKind::True:
      return {Clause{}};
    case FormulaKind::False:
      return {};
    case FormulaKind::Or: {
      std::vector<Clause> out;
      for (const auto& ch : f->children()) {
        auto part = clauses_of(ch);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
      }
      return out;
    }
    case FormulaKind::And: {
      std::vector<Clause> acc{Clause{}};
      for (const auto& ch : f->children()) {
        auto part = clauses_of(ch);
        std::vector<Clause> crossed;
        crossed.reserve(acc.size() * part.size());
        for (const auto& a : acc)
          for (const auto& b : part) {
            Clause m = a;
            for (const auto& u : b) add_unit(m, u);
            if (!clause_contradicts(m)) crossed.push_back(std::move(m));
          }
        if (crossed.size() > 1000000)
          throw cap_exceeded_error(
              "translate_to_dfa: boolean expansion of a state exceeded 1000000 clauses");
        acc = std::move(crossed);
      }
      return acc;
    }
    default:
      return {Clause{f}};
  }
}

FormulaPtr flatten_state(const FormulaPtr& f) {
  auto clauses = clauses_of(f);
  std::sort(clauses.begin(), clauses.end(), [](const Clause& a, const Clause& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i]->key() != b[i]->key()) return a[i]->key() < b[i]->key();
    return false;
  });
  // keep only clauses not implied by an already kept (smaller or equal) one
  std::vector<Clause> kept;
  for (auto& c : clauses) {
    bool redundant = false;
    for (const auto& k : kept)
      if (clause_subsumes(k, c)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(c));
  }
  if (kept.empty()) return Formula::f();
  std::vector<FormulaPtr> terms;
  terms.reserve(kept.size());
  for (auto& c : kept) terms.push_back(Formula::conj(std::move(c)));
  return Formula::disj(std::move(terms));
}

}  // namespace

int Dfa::run(const std::vector<unsigned>& word) const {
  int q = initial;
  for (unsigned letter : word) q = delta[q][letter];
  return q;
}

unsigned Dfa::letter_of(const std::vector<std::string>& props) const {
  unsigned letter = 0;
  for (const auto& p : props) {
    auto it = std::find(ap.begin(), ap.end(), p);
    if (it == ap.end())
      throw model_error("Dfa::letter_of: unknown proposition '" + p + "'");
    letter |= 1u << (it - ap.begin());
  }
  return letter;
}

std::vector<std::string> Dfa::props_of(unsigned letter) const {
  std::vector<std::string> out;
  for (size_t i = 0; i < ap.size(); ++i)
    if (letter & (1u << i)) out.push_back(ap[i]);
  return out;
}

std::unordered_map<std::string, int> Dfa::ap_index() const {
  std::unordered_map<std::string, int> idx;
  for (size_t i = 0; i < ap.size(); ++i) idx[ap[i]] = static_cast<int>(i);
  return idx;
}

void check_ap_list(const std::vector<std::string>& ap, const std::string& what) {
  if (ap.size() > 16)
    throw model_error(what + ": " + std::to_string(ap.size()) +
                      " propositions exceed the supported maximum of 16");
  for (size_t i = 0; i < ap.size(); ++i) {
    if (ap[i].empty()) throw model_error(what + ": empty proposition name");
    for (size_t j = i + 1; j < ap.size(); ++j)
      if (ap[i] == ap[j])
        throw model_error(what + ": duplicate proposition '" + ap[i] + "'");
  }
}

Dfa translate_to_dfa(const FormulaPtr& f, std::vector<std::string> ap, std::size_t cap) {
  check_ap_list(ap, "translate_to_dfa");
  Dfa dfa;
  dfa.ap = std::move(ap);
  auto idx = dfa.ap_index();
  for (const auto& name : collect_atoms(f))
    if (!idx.count(name))
      throw model_error("translate_to_dfa: formula atom '" + name +
                        "' is not a declared proposition");

  const int letters = dfa.letter_count();
  std::unordered_map<std::string, int> seen;  // formula key -> state index
  std::deque<int> todo;

  auto intern = [&](const FormulaPtr& g) {
    auto it = seen.find(g->key());
    if (it != seen.end()) return it->second;
    if (dfa.state_name.size() >= cap)
      throw cap_exceeded_error("translate_to_dfa: state cap of " + std::to_string(cap) +
                               " exceeded");
    int id = dfa.state_count();
    seen.emplace(g->key(), id);
    dfa.state_name.push_back("q" + std::to_string(id));
    dfa.state_formula.push_back(g);
    dfa.accepting.push_back(g->is_true() ? 1 : 0);
    if (g->is_false()) dfa.sink = id;
    dfa.delta.emplace_back(letters, -1);
    todo.push_back(id);
    return id;
  };

  dfa.initial = intern(flatten_state(f));
  while (!todo.empty()) {
    int q = todo.front();
    todo.pop_front();
    FormulaPtr g = dfa.state_formula[q];
    for (int letter = 0; letter < letters; ++letter)
      dfa.delta[q][letter] =
          intern(flatten_state(progress(g, static_cast<unsigned>(letter), idx)));
  }
  return dfa;
}

}  // namespace hypergames
