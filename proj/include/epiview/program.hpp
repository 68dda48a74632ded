#ifndef EPIVIEW_PROGRAM_HPP
#define EPIVIEW_PROGRAM_HPP

#include <string>
#include <vector>

#include "epiview/core.hpp"
#include "epiview/formula.hpp"

namespace epiview {

/// Objective literal: an atom under 0, 1 or 2 negations.
struct ObjectiveLiteral {
  int atom = -1;
  int negation_depth = 0;  // 0..2

  Formula to_formula() const {
    Formula f = Formula::atom(atom);
    for (int i = 0; i < negation_depth; ++i) f = Formula::neg(f);
    return f;
  }
  friend bool operator==(const ObjectiveLiteral&, const ObjectiveLiteral&) = default;
  friend auto operator<=>(const ObjectiveLiteral&, const ObjectiveLiteral&) = default;
};

/// Body literal: either an objective literal, or a subjective literal
/// K l under 0, 1 or 2 outer negations. A literal is positive when it
/// contains no negation anywhere.
struct BodyLiteral {
  bool subjective = false;
  ObjectiveLiteral inner;
  int outer_negation_depth = 0;  // subjective only, 0..2

  bool positive() const {
    return inner.negation_depth == 0 && (!subjective || outer_negation_depth == 0);
  }
  Formula to_formula() const {
    Formula f = inner.to_formula();
    if (subjective) {
      f = Formula::modal(std::move(f));
      for (int i = 0; i < outer_negation_depth; ++i) f = Formula::neg(f);
    }
    return f;
  }
  friend bool operator==(const BodyLiteral&, const BodyLiteral&) = default;
  friend auto operator<=>(const BodyLiteral&, const BodyLiteral&) = default;
};

/// Disjunctive rule head <- body with head a set of atoms (empty for a
/// constraint) and body a sequence of literals (empty for a fact).
/// head.size() + body.size() > 0.
struct Rule {
  std::vector<int> head;        // atom indices, source order, duplicates dropped
  std::vector<BodyLiteral> body;  // source order

  bool is_constraint() const { return head.empty(); }
  bool is_fact() const { return body.empty(); }

  Mask head_mask() const {
    Mask m = 0;
    for (int a : head) m |= Mask{1} << a;
    return m;
  }
  /// Atoms of positive objective body literals.
  Mask positive_objective_body() const {
    Mask m = 0;
    for (const auto& l : body)
      if (!l.subjective && l.positive()) m |= Mask{1} << l.inner.atom;
    return m;
  }
  /// Atoms of positive subjective body literals.
  Mask positive_subjective_body() const {
    Mask m = 0;
    for (const auto& l : body)
      if (l.subjective && l.positive()) m |= Mask{1} << l.inner.atom;
    return m;
  }

  /// Body conjunction as a formula; top for a fact.
  Formula body_formula() const {
    if (body.empty()) return Formula::top();
    Formula f = body.front().to_formula();
    for (std::size_t i = 1; i < body.size(); ++i)
      f = Formula::conj(std::move(f), body[i].to_formula());
    return f;
  }
  /// Head disjunction as a formula; bottom for a constraint.
  Formula head_formula() const {
    if (head.empty()) return Formula::bottom();
    Formula f = Formula::atom(head.front());
    for (std::size_t i = 1; i < head.size(); ++i)
      f = Formula::disj(std::move(f), Formula::atom(head[i]));
    return f;
  }
  Formula to_formula() const {
    return Formula::impl(body_formula(), head_formula());
  }

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Finite set of rules over one signature. Source order kept, exact
/// duplicates dropped.
struct Program {
  std::vector<Rule> rules;
  Signature signature;

  void add(Rule r) {
    for (const auto& s : rules)
      if (s == r) return;
    rules.push_back(std::move(r));
  }
};

/// One formula body -> head per rule.
inline Theory program_to_theory(const Program& p) {
  Theory g;
  g.signature = p.signature;
  for (const auto& r : p.rules) g.add(r.to_formula());
  return g;
}

// ---------------------------------------------------------------------------
// Printing back to the input language.

inline std::string print_literal(const BodyLiteral& l, const Signature& sig) {
  std::string out;
  for (int i = 0; i < (l.subjective ? l.outer_negation_depth : 0); ++i)
    out += "not ";
  if (l.subjective) out += "K ";
  for (int i = 0; i < l.inner.negation_depth; ++i) out += "not ";
  out += sig.name(l.inner.atom);
  return out;
}

inline std::string print_rule(const Rule& r, const Signature& sig) {
  std::string out;
  for (std::size_t i = 0; i < r.head.size(); ++i) {
    if (i) out += " | ";
    out += sig.name(r.head[i]);
  }
  if (!r.body.empty()) {
    if (!r.head.empty()) out += " ";
    out += ":- ";
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      if (i) out += ", ";
      out += print_literal(r.body[i], sig);
    }
  }
  out += ".";
  return out;
}

inline std::string print_program(const Program& p) {
  std::string out;
  for (const auto& r : p.rules) {
    out += print_rule(r, p.signature);
    out += '\n';
  }
  return out;
}

}  // namespace epiview

#endif  // EPIVIEW_PROGRAM_HPP
