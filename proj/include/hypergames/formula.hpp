#ifndef HYPERGAMES_FORMULA_HPP
#define HYPERGAMES_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace hypergames {

// Negation-normal-form syntax tree for the co-safe fragment: negation occurs
// only on atoms, the only temporal operators are Next and Until (Eventually is
// sugar for "true U g"). Nodes are immutable and normalized on construction,
// so two semantically-identical-by-rewriting formulas share one canonical key.
enum class FormulaKind { True, False, Atom, NotAtom, And, Or, Next, Until };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
 public:
  FormulaKind kind() const { return kind_; }

  // Atom / NotAtom only.
  const std::string& atom_name() const;

  // And / Or only: at least two children, sorted by key, duplicate-free.
  const std::vector<FormulaPtr>& children() const;

  // Next only.
  const FormulaPtr& next_body() const;

  // Until only.
  const FormulaPtr& until_lhs() const;
  const FormulaPtr& until_rhs() const;

  // Canonical printable form; equal keys imply equal trees.
  const std::string& key() const { return key_; }

  bool is_true() const { return kind_ == FormulaKind::True; }
  bool is_false() const { return kind_ == FormulaKind::False; }

  // Number of syntax-tree nodes (Eventually counts as its Until expansion).
  int size() const { return size_; }

  // ---- smart constructors (normalizing) ----
  static FormulaPtr t();
  static FormulaPtr f();
  static FormulaPtr atom(std::string name);
  static FormulaPtr not_atom(std::string name);
  static FormulaPtr conj(std::vector<FormulaPtr> parts);
  static FormulaPtr disj(std::vector<FormulaPtr> parts);
  static FormulaPtr next(FormulaPtr body);
  static FormulaPtr until(FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr eventually(FormulaPtr body);  // true U body

 private:
  Formula() = default;

  FormulaKind kind_ = FormulaKind::True;
  std::string name_;                  // Atom / NotAtom
  std::vector<FormulaPtr> parts_;     // And / Or ; [body] for Next ; [lhs,rhs] for Until
  std::string key_;
  int size_ = 1;

  static FormulaPtr make(FormulaKind k, std::string name, std::vector<FormulaPtr> parts);
};

inline bool operator==(const Formula& a, const Formula& b) { return a.key() == b.key(); }

// All atom names occurring in f.
std::set<std::string> collect_atoms(const FormulaPtr& f);

// One-step formula progression over a single letter. `truth` holds the value
// of each declared proposition, `ap_index` maps proposition name -> index.
// Unknown atoms raise model_error.
FormulaPtr progress(const FormulaPtr& f, const std::vector<bool>& truth,
                    const std::unordered_map<std::string, int>& ap_index);

// Bitmask convenience wrapper: bit i of `letter` is proposition ap_index[i].
FormulaPtr progress(const FormulaPtr& f, unsigned letter,
                    const std::unordered_map<std::string, int>& ap_index);

}  // namespace hypergames

#endif
