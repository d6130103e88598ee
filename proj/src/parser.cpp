#include "hypergames/parser.hpp"

#include <cctype>
#include <vector>

#include "hypergames/errors.hpp"

namespace hypergames {

namespace {

enum class Tok { End, LPar, RPar, And, Or, Not, NextOp, UntilOp, FinallyOp, TrueLit, FalseLit, Name };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      if (i_ >= s_.size()) break;
      size_t at = i_;
      char c = s_[i_];
      if (c == '(') {
        ++i_;
        out.push_back({Tok::LPar, "(", at});
      } else if (c == ')') {
        ++i_;
        out.push_back({Tok::RPar, ")", at});
      } else if (c == '&') {
        expect_pair('&');
        out.push_back({Tok::And, "&&", at});
      } else if (c == '|') {
        expect_pair('|');
        out.push_back({Tok::Or, "||", at});
      } else if (c == '!') {
        ++i_;
        out.push_back({Tok::Not, "!", at});
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        out.push_back(lex_word(at));
      } else {
        throw model_error("parse_scltl: stray character '" + std::string(1, c) +
                          "' at position " + std::to_string(at));
      }
    }
    out.push_back({Tok::End, "", s_.size()});
    return out;
  }

 private:
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  void expect_pair(char c) {
    if (i_ + 1 >= s_.size() || s_[i_ + 1] != c)
      throw model_error(std::string("parse_scltl: expected '") + c + c + "' at position " +
                        std::to_string(i_));
    i_ += 2;
  }

  // A word is either a reserved operator/constant or an atom name. Atom names
  // may continue with balanced parenthesized groups as long as those groups
  // contain only name characters and parens (e.g. `root(2)`, `svc(0)(1)`).
  Token lex_word(size_t at) {
    std::string w;
    while (i_ < s_.size() && name_char(s_[i_])) w += s_[i_++];
    if (w == "true") return {Tok::TrueLit, w, at};
    if (w == "false") return {Tok::FalseLit, w, at};
    if (w == "X") return {Tok::NextOp, w, at};
    if (w == "U") return {Tok::UntilOp, w, at};
    if (w == "F") return {Tok::FinallyOp, w, at};
    while (i_ < s_.size()) {
      if (name_char(s_[i_])) {
        w += s_[i_++];
      } else if (s_[i_] == '(') {
        size_t j = i_;
        int depth = 0;
        bool plain = true;
        for (; j < s_.size(); ++j) {
          char c = s_[j];
          if (c == '(') {
            ++depth;
          } else if (c == ')') {
            if (--depth == 0) {
              ++j;
              break;
            }
          } else if (!name_char(c)) {
            plain = false;
            break;
          }
        }
        if (!plain || depth != 0) break;  // a real subformula group (or unbalanced)
        w += s_.substr(i_, j - i_);
        i_ = j;
      } else {
        break;
      }
    }
    return {Tok::Name, w, at};
  }

  const std::string& s_;
  size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FormulaPtr run() {
    FormulaPtr f = parse_or();
    if (cur().kind != Tok::End)
      throw model_error("parse_scltl: unexpected '" + cur().text + "' at position " +
                        std::to_string(cur().pos));
    return f;
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  void advance() { ++i_; }

  FormulaPtr parse_or() {
    std::vector<FormulaPtr> parts{parse_and()};
    while (cur().kind == Tok::Or) {
      advance();
      parts.push_back(parse_and());
    }
    return parts.size() == 1 ? parts[0] : Formula::disj(std::move(parts));
  }

  FormulaPtr parse_and() {
    std::vector<FormulaPtr> parts{parse_until()};
    while (cur().kind == Tok::And) {
      advance();
      parts.push_back(parse_until());
    }
    return parts.size() == 1 ? parts[0] : Formula::conj(std::move(parts));
  }

  FormulaPtr parse_until() {
    FormulaPtr lhs = parse_unary();
    if (cur().kind == Tok::UntilOp) {
      advance();
      return Formula::until(std::move(lhs), parse_until());
    }
    return lhs;
  }

  FormulaPtr parse_unary() {
    switch (cur().kind) {
      case Tok::Not: {
        advance();
        return negate(parse_unary());
      }
      case Tok::NextOp: {
        advance();
        return Formula::next(parse_unary());
      }
      case Tok::FinallyOp: {
        advance();
        return Formula::eventually(parse_unary());
      }
      case Tok::TrueLit:
        advance();
        return Formula::t();
      case Tok::FalseLit:
        advance();
        return Formula::f();
      case Tok::Name: {
        std::string name = cur().text;
        advance();
        return Formula::atom(std::move(name));
      }
      case Tok::LPar: {
        advance();
        FormulaPtr f = parse_or();
        if (cur().kind != Tok::RPar)
          throw model_error("parse_scltl: expected ')' at position " +
                            std::to_string(cur().pos));
        advance();
        return f;
      }
      default:
        throw model_error("parse_scltl: unexpected '" + cur().text + "' at position " +
                          std::to_string(cur().pos));
    }
  }

  static FormulaPtr negate(const FormulaPtr& f) {
    switch (f->kind()) {
      case FormulaKind::True:
        return Formula::f();
      case FormulaKind::False:
        return Formula::t();
      case FormulaKind::Atom:
        return Formula::not_atom(f->atom_name());
      case FormulaKind::NotAtom:
        return Formula::atom(f->atom_name());
      case FormulaKind::And: {
        std::vector<FormulaPtr> parts;
        for (const auto& c : f->children()) parts.push_back(negate(c));
        return Formula::disj(std::move(parts));
      }
      case FormulaKind::Or: {
        std::vector<FormulaPtr> parts;
        for (const auto& c : f->children()) parts.push_back(negate(c));
        return Formula::conj(std::move(parts));
      }
      case FormulaKind::Next:
        return Formula::next(negate(f->next_body()));
      case FormulaKind::Until:
        throw model_error(
            "parse_scltl: co-safety violation: negating '" + f->key() +
            "' needs the Release operator, which the co-safe fragment excludes");
    }
    throw model_error("parse_scltl: corrupt formula node");
  }

  std::vector<Token> toks_;
  size_t i_ = 0;
};

}  // namespace

FormulaPtr parse_scltl(const std::string& text) {
  return Parser(Lexer(text).run()).run();
}

}  // namespace hypergames
