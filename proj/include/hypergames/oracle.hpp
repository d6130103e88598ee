#ifndef HYPERGAMES_ORACLE_HPP
#define HYPERGAMES_ORACLE_HPP

#include <string>
#include <vector>

#include "hypergames/dfa.hpp"
#include "hypergames/formula.hpp"

namespace hypergames {

// Classification of a finite word against a co-safe formula.
//   good_prefix : every infinite extension satisfies the formula
//   dead        : no infinite extension satisfies it
//   not_yet     : neither
enum class Verdict { good_prefix, not_yet, dead };

std::string to_string(Verdict v);

// Reference semantics used to cross-check the automaton construction.
//
// The good-prefix side is a direct satisfaction recursion over the finite
// word (atoms demand a position inside the word; an Until demands a witness
// position inside the word), with no progression involved. The dead side asks
// whether progressing the formula through the whole word collapses to the
// unsatisfiable constant.
bool strong_sat(const FormulaPtr& f, const std::vector<unsigned>& word,
                const std::vector<std::string>& ap);

// Bulk form of the good-prefix side for exhaustive checks: the smallest k such
// that word[0..k) is strongly satisfying, or -1 when no prefix of the word
// (including the whole word) is. Satisfaction is extension-closed, so this
// single number classifies every prefix; one backward pass computes it.
int good_prefix_horizon(const FormulaPtr& f, const std::vector<unsigned>& word,
                        const std::vector<std::string>& ap);

// Same recursion, compiled once against a proposition list so that checking
// millions of words stays allocation-free after the first call.
class HorizonOracle {
 public:
  HorizonOracle(const FormulaPtr& f, const std::vector<std::string>& ap);

  // contract of good_prefix_horizon
  int horizon(const unsigned* word, int length) const;
  int horizon(const std::vector<unsigned>& word) const {
    return horizon(word.data(), static_cast<int>(word.size()));
  }

 private:
  struct Node {
    FormulaKind kind = FormulaKind::True;
    int bit = -1;
    int a = -1, b = -1;
  };
  std::vector<Node> nodes_;
  int root_ = 0;
  mutable std::vector<int> h_;  // row-major (node, boundary) scratch
};

Verdict oracle_verdict(const FormulaPtr& f, const std::vector<unsigned>& word,
                       const std::vector<std::string>& ap);

// Verdict the automaton assigns to a word ending in state q.
Verdict dfa_verdict(const Dfa& dfa, int q);

}  // namespace hypergames

#endif
