#ifndef HYPERGAMES_DFA_HPP
#define HYPERGAMES_DFA_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypergames/formula.hpp"

namespace hypergames {

// Deterministic automaton over the powerset alphabet of a declared proposition
// list (at most 16 propositions; a letter is the bitmask of the propositions
// holding in one state). Accepting states are absorbing: acceptance means "a
// good prefix has been seen", which no continuation can undo.
struct Dfa {
  std::vector<std::string> ap;           // proposition i <-> bit i
  std::vector<std::string> state_name;   // q0, q1, ... in discovery order
  std::vector<FormulaPtr> state_formula; // empty when loaded from a document
  std::vector<char> accepting;           // per state
  std::vector<std::vector<int>> delta;   // [state][letter] -> state
  int initial = 0;
  int sink = -1;                         // unsatisfiable state, -1 if absent

  int state_count() const { return static_cast<int>(state_name.size()); }
  int letter_count() const { return 1 << ap.size(); }

  int step(int q, unsigned letter) const { return delta[q][letter]; }

  // Runs the word from `initial`; the word is a sequence of letters.
  int run(const std::vector<unsigned>& word) const;

  // Bitmask of a proposition set; unknown names raise model_error.
  unsigned letter_of(const std::vector<std::string>& props) const;

  // Proposition names present in a letter, in declared order.
  std::vector<std::string> props_of(unsigned letter) const;

  std::unordered_map<std::string, int> ap_index() const;
};

// Builds the automaton of good prefixes of `f` by progression closure: states
// are normalized formulas, the successor of g under letter s is progress(g,s),
// the accepting state is `true`. Raises model_error when f mentions an atom
// outside `ap`, when `ap` is malformed or longer than 16, and
// cap_exceeded_error when more than `cap` states appear.
Dfa translate_to_dfa(const FormulaPtr& f, std::vector<std::string> ap,
                     std::size_t cap = 1000000);

// Declared-proposition sanity shared with arena loading: nonempty unique
// names, at most 16.
void check_ap_list(const std::vector<std::string>& ap, const std::string& what);

}  // namespace hypergames

#endif
