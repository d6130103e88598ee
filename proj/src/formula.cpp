#include "hypergames/formula.hpp"

#include <algorithm>

#include "hypergames/errors.hpp"

namespace hypergames {

namespace {

std::string build_key(FormulaKind k, const std::string& name,
                      const std::vector<FormulaPtr>& parts) {
  switch (k) {
    case FormulaKind::True:
      return "true";
    case FormulaKind::False:
      return "false";
    case FormulaKind::Atom:
      return name;
    case FormulaKind::NotAtom:
      return "!" + name;
    case FormulaKind::Next:
      return "(X " + parts[0]->key() + ")";
    case FormulaKind::Until:
      return "(" + parts[0]->key() + " U " + parts[1]->key() + ")";
    case FormulaKind::And:
    case FormulaKind::Or: {
      const char* op = (k == FormulaKind::And) ? " && " : " || ";
      std::string out = "(";
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += op;
        out += parts[i]->key();
      }
      return out + ")";
    }
  }
  return "?";
}

// true if `needle` occurs among the children of `hay` (hay has kind And/Or)
bool contains_child(const FormulaPtr& hay, const FormulaPtr& needle) {
  for (const auto& c : hay->children())
    if (c->key() == needle->key()) return true;
  return false;
}

}  // namespace

const std::string& Formula::atom_name() const { return name_; }
const std::vector<FormulaPtr>& Formula::children() const { return parts_; }
const FormulaPtr& Formula::next_body() const { return parts_[0]; }
const FormulaPtr& Formula::until_lhs() const { return parts_[0]; }
const FormulaPtr& Formula::until_rhs() const { return parts_[1]; }

FormulaPtr Formula::make(FormulaKind k, std::string name, std::vector<FormulaPtr> parts) {
  auto node = std::shared_ptr<Formula>(new Formula());
  node->kind_ = k;
  node->name_ = std::move(name);
  node->parts_ = std::move(parts);
  node->key_ = build_key(k, node->name_, node->parts_);
  node->size_ = 1;
  for (const auto& p : node->parts_) node->size_ += p->size();
  return node;
}

FormulaPtr Formula::t() {
  static const FormulaPtr v = make(FormulaKind::True, "", {});
  return v;
}

FormulaPtr Formula::f() {
  static const FormulaPtr v = make(FormulaKind::False, "", {});
  return v;
}

FormulaPtr Formula::atom(std::string name) {
  return make(FormulaKind::Atom, std::move(name), {});
}

FormulaPtr Formula::not_atom(std::string name) {
  return make(FormulaKind::NotAtom, std::move(name), {});
}

FormulaPtr Formula::conj(std::vector<FormulaPtr> parts) {
  std::vector<FormulaPtr> flat;
  for (auto& p : parts) {
    if (p->is_false()) return f();
    if (p->is_true()) continue;
    if (p->kind() == FormulaKind::And)
      flat.insert(flat.end(), p->children().begin(), p->children().end());
    else
      flat.push_back(std::move(p));
  }
  std::sort(flat.begin(), flat.end(),
            [](const FormulaPtr& a, const FormulaPtr& b) { return a->key() < b->key(); });
  flat.erase(std::unique(flat.begin(), flat.end(),
                         [](const FormulaPtr& a, const FormulaPtr& b) {
                           return a->key() == b->key();
                         }),
             flat.end());
  // absorption: g && (g || h)  ->  g
  std::vector<FormulaPtr> kept;
  for (const auto& p : flat) {
    bool absorbed = false;
    if (p->kind() == FormulaKind::Or) {
      for (const auto& other : flat)
        if (other->key() != p->key() && contains_child(p, other)) {
          absorbed = true;
          break;
        }
    }
    if (!absorbed) kept.push_back(p);
  }
  if (kept.empty()) return t();
  if (kept.size() == 1) return kept[0];
  return make(FormulaKind::And, "", std::move(kept));
}

FormulaPtr Formula::disj(std::vector<FormulaPtr> parts) {
  std::vector<FormulaPtr> flat;
  for (auto& p : parts) {
    if (p->is_true()) return t();
    if (p->is_false()) continue;
    if (p->kind() == FormulaKind::Or)
      flat.insert(flat.end(), p->children().begin(), p->children().end());
    else
      flat.push_back(std::move(p));
  }
  std::sort(flat.begin(), flat.end(),
            [](const FormulaPtr& a, const FormulaPtr& b) { return a->key() < b->key(); });
  flat.erase(std::unique(flat.begin(), flat.end(),
                         [](const FormulaPtr& a, const FormulaPtr& b) {
                           return a->key() == b->key();
                         }),
             flat.end());
  // absorption: g || (g && h)  ->  g
  std::vector<FormulaPtr> kept;
  for (const auto& p : flat) {
    bool absorbed = false;
    if (p->kind() == FormulaKind::And) {
      for (const auto& other : flat)
        if (other->key() != p->key() && contains_child(p, other)) {
          absorbed = true;
          break;
        }
    }
    if (!absorbed) kept.push_back(p);
  }
  if (kept.empty()) return f();
  if (kept.size() == 1) return kept[0];
  return make(FormulaKind::Or, "", std::move(kept));
}

FormulaPtr Formula::next(FormulaPtr body) {
  if (body->is_true()) return t();
  if (body->is_false()) return f();
  return make(FormulaKind::Next, "", {std::move(body)});
}

FormulaPtr Formula::until(FormulaPtr lhs, FormulaPtr rhs) {
  if (rhs->is_true()) return t();
  if (rhs->is_false()) return f();
  if (lhs->is_false()) return rhs;  // nothing may precede rhs, so rhs holds now
  return make(FormulaKind::Until, "", {std::move(lhs), std::move(rhs)});
}

FormulaPtr Formula::eventually(FormulaPtr body) { return until(t(), std::move(body)); }

std::set<std::string> collect_atoms(const FormulaPtr& f) {
  std::set<std::string> out;
  std::vector<const Formula*> stack{f.get()};
  while (!stack.empty()) {
    const Formula* cur = stack.back();
    stack.pop_back();
    switch (cur->kind()) {
      case FormulaKind::Atom:
      case FormulaKind::NotAtom:
        out.insert(cur->atom_name());
        break;
      case FormulaKind::And:
      case FormulaKind::Or:
        for (const auto& c : cur->children()) stack.push_back(c.get());
        break;
      case FormulaKind::Next:
        stack.push_back(cur->next_body().get());
        break;
      case FormulaKind::Until:
        stack.push_back(cur->until_lhs().get());
        stack.push_back(cur->until_rhs().get());
        break;
      default:
        break;
    }
  }
  return out;
}

FormulaPtr progress(const FormulaPtr& f, const std::vector<bool>& truth,
                    const std::unordered_map<std::string, int>& ap_index) {
  switch (f->kind()) {
    case FormulaKind::True:
      return Formula::t();
    case FormulaKind::False:
      return Formula::f();
    case FormulaKind::Atom:
    case FormulaKind::NotAtom: {
      auto it = ap_index.find(f->atom_name());
      if (it == ap_index.end())
        throw model_error("progress: atom '" + f->atom_name() +
                          "' is not a declared proposition");
      bool holds = truth[it->second];
      if (f->kind() == FormulaKind::NotAtom) holds = !holds;
      return holds ? Formula::t() : Formula::f();
    }
    case FormulaKind::And: {
      std::vector<FormulaPtr> parts;
      parts.reserve(f->children().size());
      for (const auto& c : f->children()) parts.push_back(progress(c, truth, ap_index));
      return Formula::conj(std::move(parts));
    }
    case FormulaKind::Or: {
      std::vector<FormulaPtr> parts;
      parts.reserve(f->children().size());
      for (const auto& c : f->children()) parts.push_back(progress(c, truth, ap_index));
      return Formula::disj(std::move(parts));
    }
    case FormulaKind::Next:
      return f->next_body();
    case FormulaKind::Until: {
      // g U h  ->  progress(h) || (progress(g) && g U h)
      auto now = progress(f->until_rhs(), truth, ap_index);
      auto keep = Formula::conj({progress(f->until_lhs(), truth, ap_index), f});
      return Formula::disj({std::move(now), std::move(keep)});
    }
  }
  throw model_error("progress: corrupt formula node");
}

FormulaPtr progress(const FormulaPtr& f, unsigned letter,
                    const std::unordered_map<std::string, int>& ap_index) {
  std::vector<bool> truth(ap_index.size(), false);
  for (const auto& [name, idx] : ap_index) {
    (void)name;
    if (letter & (1u << idx)) truth[idx] = true;
  }
  return progress(f, truth, ap_index);
}

}  // namespace hypergames
