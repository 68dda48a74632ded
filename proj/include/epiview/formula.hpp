#ifndef EPIVIEW_FORMULA_HPP
#define EPIVIEW_FORMULA_HPP

#include <cassert>
#include <memory>
#include <string>
#include <vector>

#include "epiview/core.hpp"

namespace epiview {

enum class FormulaKind : std::uint8_t { bottom, atom, conj, disj, impl, modal };

/// Immutable modal propositional formula. Derived connectives are
/// definitional rewrites: not(f) == impl(f, bottom), top == not(bottom),
/// iff(a, b) == conj(impl(a, b), impl(b, a)).
class Formula {
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;
  struct Node {
    FormulaKind kind;
    int atom = -1;
    NodePtr a = nullptr;
    NodePtr b = nullptr;
  };

 public:
  Formula() : Formula(bottom()) {}

  static Formula bottom() {
    return Formula(std::make_shared<Node>(Node{FormulaKind::bottom}));
  }
  static Formula top() { return impl(bottom(), bottom()); }
  static Formula atom(int index) {
    assert(index >= 0);
    return Formula(std::make_shared<Node>(Node{FormulaKind::atom, index}));
  }
  static Formula conj(Formula l, Formula r) {
    return binary(FormulaKind::conj, std::move(l), std::move(r));
  }
  static Formula disj(Formula l, Formula r) {
    return binary(FormulaKind::disj, std::move(l), std::move(r));
  }
  static Formula impl(Formula l, Formula r) {
    return binary(FormulaKind::impl, std::move(l), std::move(r));
  }
  static Formula modal(Formula f) {
    return Formula(std::make_shared<Node>(
        Node{FormulaKind::modal, -1, std::move(f.node_)}));
  }
  static Formula neg(Formula f) { return impl(std::move(f), bottom()); }
  static Formula iff(Formula l, Formula r) {
    return conj(impl(l, r), impl(std::move(r), std::move(l)));
  }

  FormulaKind kind() const { return node_->kind; }
  int atom_index() const {
    assert(kind() == FormulaKind::atom);
    return node_->atom;
  }
  Formula lhs() const {
    assert(node_->a);
    return Formula(node_->a);
  }
  Formula rhs() const {
    assert(node_->b);
    return Formula(node_->b);
  }
  /// Operand of a modal node.
  Formula operand() const {
    assert(kind() == FormulaKind::modal);
    return Formula(node_->a);
  }

  bool is_bottom() const { return kind() == FormulaKind::bottom; }
  /// Recognizes the canonical top rewrite, impl(bottom, bottom).
  bool is_top() const {
    return kind() == FormulaKind::impl && node_->a->kind == FormulaKind::bottom &&
           node_->b->kind == FormulaKind::bottom;
  }
  /// Recognizes a negation rewrite impl(f, bottom) that is not top.
  bool is_negation() const {
    return kind() == FormulaKind::impl && node_->b->kind == FormulaKind::bottom &&
           node_->a->kind != FormulaKind::bottom;
  }

  /// Structural equality (after derived-connective expansion, which is the
  /// only representation there is).
  friend bool operator==(const Formula& x, const Formula& y) {
    return equal(x.node_.get(), y.node_.get());
  }

  const void* id() const { return node_.get(); }

 private:
  explicit Formula(NodePtr p) : node_(std::move(p)) {}

  static Formula binary(FormulaKind k, Formula l, Formula r) {
    return Formula(std::make_shared<Node>(
        Node{k, -1, std::move(l.node_), std::move(r.node_)}));
  }

  static bool equal(const Node* x, const Node* y) {
    if (x == y) return true;
    if (x->kind != y->kind || x->atom != y->atom) return false;
    if (!!x->a != !!y->a || !!x->b != !!y->b) return false;
    if (x->a && !equal(x->a.get(), y->a.get())) return false;
    if (x->b && !equal(x->b.get(), y->b.get())) return false;
    return true;
  }

  NodePtr node_;
};

/// Finite set of formulas over one signature. Insertion order is kept;
/// structural duplicates are dropped.
struct Theory {
  std::vector<Formula> formulas;
  Signature signature;

  void add(Formula f) {
    for (const auto& g : formulas)
      if (g == f) return;
    formulas.push_back(std::move(f));
  }
  bool empty() const { return formulas.empty(); }
};

enum class FormulaClass { objective, subjective, mixed, atomless };

namespace detail {

inline void scan_atoms(const Formula& f, bool under_modal, bool& outside,
                       bool& inside, bool& has_modal) {
  switch (f.kind()) {
    case FormulaKind::bottom:
      return;
    case FormulaKind::atom:
      (under_modal ? inside : outside) = true;
      return;
    case FormulaKind::modal:
      has_modal = true;
      scan_atoms(f.operand(), true, outside, inside, has_modal);
      return;
    default:
      scan_atoms(f.lhs(), under_modal, outside, inside, has_modal);
      scan_atoms(f.rhs(), under_modal, outside, inside, has_modal);
      return;
  }
}

}  // namespace detail

/// objective: no modal operator occurs; subjective: at least one atom and
/// every atom occurrence is under the modal operator; atomless: no atoms.
inline FormulaClass classify_formula(const Formula& f) {
  bool outside = false, inside = false, has_modal = false;
  detail::scan_atoms(f, false, outside, inside, has_modal);
  if (!outside && !inside) return FormulaClass::atomless;
  if (!outside) return FormulaClass::subjective;
  if (!has_modal) return FormulaClass::objective;
  return FormulaClass::mixed;
}

inline bool has_modal(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::bottom:
    case FormulaKind::atom:
      return false;
    case FormulaKind::modal:
      return true;
    default:
      return has_modal(f.lhs()) || has_modal(f.rhs());
  }
}

inline bool has_modal(const Theory& g) {
  for (const auto& f : g.formulas)
    if (has_modal(f)) return true;
  return false;
}

/// True when every modal operator occurrence sits under a negation
/// (an antecedent of some impl(_, bottom)).
inline bool modals_only_under_negation(const Formula& f, bool shielded = false) {
  switch (f.kind()) {
    case FormulaKind::bottom:
    case FormulaKind::atom:
      return true;
    case FormulaKind::modal:
      return shielded && modals_only_under_negation(f.operand(), shielded);
    case FormulaKind::impl:
      if (f.rhs().is_bottom())
        return modals_only_under_negation(f.lhs(), true);
      return modals_only_under_negation(f.lhs(), shielded) &&
             modals_only_under_negation(f.rhs(), shielded);
    default:
      return modals_only_under_negation(f.lhs(), shielded) &&
             modals_only_under_negation(f.rhs(), shielded);
  }
}

inline bool modals_only_under_negation(const Theory& g) {
  for (const auto& f : g.formulas)
    if (!modals_only_under_negation(f)) return false;
  return true;
}

namespace detail {

inline void push_unique(std::vector<Formula>& out, const Formula& f) {
  for (const auto& g : out)
    if (g == f) return;
  out.push_back(f);
}

inline void collect_modals(const Formula& f, std::vector<Formula>& out,
                           bool maximal_only) {
  switch (f.kind()) {
    case FormulaKind::bottom:
    case FormulaKind::atom:
      return;
    case FormulaKind::modal:
      if (!maximal_only) collect_modals(f.operand(), out, maximal_only);
      push_unique(out, f);
      return;
    default:
      collect_modals(f.lhs(), out, maximal_only);
      collect_modals(f.rhs(), out, maximal_only);
      return;
  }
}

}  // namespace detail

/// Distinct outermost modal subformulas of the theory, de-duplicated by
/// structural equality, in first-occurrence order.
inline std::vector<Formula> maximal_modal_subformulas(const Theory& g) {
  std::vector<Formula> out;
  for (const auto& f : g.formulas) detail::collect_modals(f, out, true);
  return out;
}

/// All distinct modal subformulas, innermost first.
inline std::vector<Formula> all_modal_subformulas(const Theory& g) {
  std::vector<Formula> out;
  for (const auto& f : g.formulas) detail::collect_modals(f, out, false);
  return out;
}

/// Replaces each occurrence of modals[i] (an outermost modal subformula)
/// by top/bottom according to values[i]. The result is modal-free when
/// `modals` covers every maximal modal subformula of `f`.
inline Formula substitute_modals(const Formula& f,
                                 const std::vector<Formula>& modals,
                                 const std::vector<bool>& values) {
  assert(modals.size() == values.size());
  switch (f.kind()) {
    case FormulaKind::bottom:
    case FormulaKind::atom:
      return f;
    case FormulaKind::modal:
      for (std::size_t i = 0; i < modals.size(); ++i)
        if (modals[i] == f) return values[i] ? Formula::top() : Formula::bottom();
      assert(false && "maximal modal subformula missing from substitution");
      return f;
    case FormulaKind::conj:
      return Formula::conj(substitute_modals(f.lhs(), modals, values),
                           substitute_modals(f.rhs(), modals, values));
    case FormulaKind::disj:
      return Formula::disj(substitute_modals(f.lhs(), modals, values),
                           substitute_modals(f.rhs(), modals, values));
    case FormulaKind::impl:
      return Formula::impl(substitute_modals(f.lhs(), modals, values),
                           substitute_modals(f.rhs(), modals, values));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Printing. The printed form reparses to a structurally identical formula:
// same-operator nesting on the non-associative side is parenthesized.

namespace detail {

// Precedence tiers: impl 1 (right-assoc), disj 2, conj 3, prefix 4, atom 5.
inline int print_level(const Formula& f) {
  if (f.is_top() || f.is_bottom()) return 5;
  switch (f.kind()) {
    case FormulaKind::atom:
      return 5;
    case FormulaKind::modal:
      return 4;
    case FormulaKind::impl:
      return f.is_negation() ? 4 : 1;
    case FormulaKind::disj:
      return 2;
    case FormulaKind::conj:
      return 3;
    default:
      return 5;
  }
}

inline void print_to(const Formula& f, const Signature& sig, int min_level,
                     std::string& out) {
  const bool parens = print_level(f) < min_level;
  if (parens) out += '(';
  if (f.is_top()) {
    out += "#top";
  } else if (f.is_bottom()) {
    out += "#bot";
  } else if (f.is_negation()) {
    out += "not ";
    print_to(f.lhs(), sig, 4, out);
  } else {
    switch (f.kind()) {
      case FormulaKind::atom:
        out += sig.name(f.atom_index());
        break;
      case FormulaKind::modal:
        out += "K ";
        print_to(f.operand(), sig, 4, out);
        break;
      case FormulaKind::conj:
        print_to(f.lhs(), sig, 3, out);
        out += " & ";
        print_to(f.rhs(), sig, 4, out);
        break;
      case FormulaKind::disj:
        print_to(f.lhs(), sig, 2, out);
        out += " | ";
        print_to(f.rhs(), sig, 3, out);
        break;
      case FormulaKind::impl:
        print_to(f.lhs(), sig, 2, out);
        out += " -> ";
        print_to(f.rhs(), sig, 1, out);
        break;
      default:
        break;
    }
  }
  if (parens) out += ')';
}

}  // namespace detail

inline std::string print_formula(const Formula& f, const Signature& sig) {
  std::string out;
  detail::print_to(f, sig, 1, out);
  return out;
}

inline std::string print_theory(const Theory& g) {
  std::string out;
  for (const auto& f : g.formulas) {
    out += print_formula(f, g.signature);
    out += ".\n";
  }
  return out;
}

// Interpretation / belief-set rendering: atoms in signature order.
inline std::string print_interpretation(Mask m, const Signature& sig) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < sig.size(); ++i) {
    if (m & (Mask{1} << i)) {
      if (!first) out += ',';
      out += sig.name(i);
      first = false;
    }
  }
  out += '}';
  return out;
}

}  // namespace epiview

#endif  // EPIVIEW_FORMULA_HPP
