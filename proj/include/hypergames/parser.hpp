#ifndef HYPERGAMES_PARSER_HPP
#define HYPERGAMES_PARSER_HPP

#include <string>

#include "hypergames/formula.hpp"

namespace hypergames {

// Parses the co-safe fragment.
//
//   or    := and ('||' and)*
//   and   := until ('&&' until)*
//   until := unary ('U' until)?           right-associative
//   unary := ('!' | 'X' | 'F') unary | 'true' | 'false' | name | '(' or ')'
//
// Names match [A-Za-z_][A-Za-z0-9_()]*; a parenthesized group directly after
// an identifier is folded into the name only when it is balanced and free of
// operators and spaces, so `root(2)` is one atom while `F(h2 && F h3)` applies
// F to a subformula. `true`, `false`, `X`, `U`, `F` are reserved words.
//
// Negation is pushed to atoms while parsing; pushing it across 'U' would need
// the Release operator, which the fragment lacks, and raises model_error
// mentioning "co-safety violation".
FormulaPtr parse_scltl(const std::string& text);

}  // namespace hypergames

#endif
