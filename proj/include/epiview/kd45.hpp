#ifndef EPIVIEW_KD45_HPP
#define EPIVIEW_KD45_HPP

#include <vector>

#include "epiview/core.hpp"
#include "epiview/formula.hpp"
#include "epiview/ht.hpp"

namespace epiview {

/// Nonempty set of belief sets (propositional interpretations), kept in
/// canonical sorted order.
struct BeliefView {
  std::vector<Mask> worlds;

  static BeliefView of(std::vector<Mask> worlds) {
    canonicalize(worlds);
    if (worlds.empty())
      throw std::invalid_argument("a belief view holds at least one belief set");
    return BeliefView{std::move(worlds)};
  }

  bool contains(Mask m) const {
    return std::binary_search(worlds.begin(), worlds.end(), m);
  }
  std::size_t size() const { return worlds.size(); }

  friend bool operator==(const BeliefView&, const BeliefView&) = default;
  friend auto operator<=>(const BeliefView& a, const BeliefView& b) {
    return a.worlds <=> b.worlds;
  }
};

/// Real world paired with a belief view; the real world need not belong
/// to the view.
struct BeliefInterpretation {
  Mask real_world = 0;
  BeliefView view;
};

/// KD45 satisfaction at <I, W>. Implication is classical; K psi holds iff
/// psi holds at every world of the view.
inline bool kd45_sat(Mask real_world, const BeliefView& view, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::bottom:
      return false;
    case FormulaKind::atom:
      return (real_world >> f.atom_index()) & 1;
    case FormulaKind::conj:
      return kd45_sat(real_world, view, f.lhs()) &&
             kd45_sat(real_world, view, f.rhs());
    case FormulaKind::disj:
      return kd45_sat(real_world, view, f.lhs()) ||
             kd45_sat(real_world, view, f.rhs());
    case FormulaKind::impl:
      return !kd45_sat(real_world, view, f.lhs()) ||
             kd45_sat(real_world, view, f.rhs());
    case FormulaKind::modal:
      for (Mask j : view.worlds)
        if (!kd45_sat(j, view, f.operand())) return false;
      return true;
  }
  return false;
}

inline bool kd45_sat(const BeliefInterpretation& bi, const Formula& f) {
  return kd45_sat(bi.real_world, bi.view, f);
}

/// W |= f in the S5 sense: f holds at every world of W under W.
inline bool epistemic_sat(const BeliefView& view, const Formula& f) {
  for (Mask j : view.worlds)
    if (!kd45_sat(j, view, f)) return false;
  return true;
}

/// <I, W> is a belief model of g: every formula holds at every world of
/// W and at the real world.
inline bool is_belief_model(const BeliefInterpretation& bi, const Theory& g) {
  for (const auto& f : g.formulas) {
    if (!epistemic_sat(bi.view, f)) return false;
    if (!kd45_sat(bi.real_world, bi.view, f)) return false;
  }
  return true;
}

/// W is an epistemic (S5) model of g.
inline bool is_epistemic_model(const BeliefView& view, const Theory& g) {
  for (const auto& f : g.formulas)
    if (!epistemic_sat(view, f)) return false;
  return true;
}

/// Replaces each maximal modal subformula K phi by top when W |= K phi and
/// by bottom otherwise. The result is modal-free; it depends on W only
/// through the truth of each distinct maximal modal subformula.
inline Theory subjective_reduct(const Theory& g, const BeliefView& view) {
  std::vector<Formula> modals = maximal_modal_subformulas(g);
  std::vector<bool> values(modals.size());
  for (std::size_t i = 0; i < modals.size(); ++i)
    values[i] = epistemic_sat(view, modals[i]);
  Theory out;
  out.signature = g.signature;
  for (const auto& f : g.formulas)
    out.add(substitute_modals(f, modals, values));
  return out;
}

namespace detail {

enum class ReductModels { stable, classical };

// Guess-and-check fixpoint enumeration: the reduct depends only on the
// truth of the k distinct maximal modal subformulas, so each of the 2^k
// assignments is tried, the resulting model set is computed, and the
// assignment is kept only when that model set reproduces it.
inline std::vector<BeliefView> reduct_fixpoints(const Theory& g,
                                                const Signature& sig,
                                                ReductModels which) {
  require_enumerable(sig);
  std::vector<Formula> modals = maximal_modal_subformulas(g);
  const std::size_t k = modals.size();
  if (k > 20)
    throw CapExceeded(static_cast<int>(k), 20, "modal-subformula guessing");
  std::vector<BeliefView> out;
  for (std::uint64_t guess = 0; guess < (std::uint64_t{1} << k); ++guess) {
    std::vector<bool> values(k);
    for (std::size_t i = 0; i < k; ++i) values[i] = (guess >> i) & 1;
    Theory reduct;
    reduct.signature = sig;
    for (const auto& f : g.formulas)
      reduct.add(substitute_modals(f, modals, values));
    std::vector<Mask> models = which == ReductModels::stable
                                   ? stable_models(reduct, sig)
                                   : classical_models(reduct, sig);
    if (models.empty()) continue;
    BeliefView view = BeliefView::of(std::move(models));
    bool verified = true;
    for (std::size_t i = 0; i < k && verified; ++i)
      verified = epistemic_sat(view, modals[i]) == values[i];
    if (!verified) continue;
    out.push_back(std::move(view));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// G91 world views: nonempty W with W == SM[g^W].
inline std::vector<BeliefView> g91_world_views(const Theory& g,
                                               const Signature& sig) {
  return detail::reduct_fixpoints(g, sig, detail::ReductModels::stable);
}

/// AEL world views: nonempty W with W == CL[g^W].
inline std::vector<BeliefView> ael_world_views(const Theory& g,
                                               const Signature& sig) {
  return detail::reduct_fixpoints(g, sig, detail::ReductModels::classical);
}

/// Excluded-middle completion a | not a for every atom of the signature.
/// The AEL world views of g are the G91 world views of the completion.
inline Theory with_excluded_middle(const Theory& g, const Signature& sig) {
  Theory out = g;
  out.signature = sig;
  for (int i = 0; i < sig.size(); ++i) {
    Formula a = Formula::atom(i);
    out.add(Formula::disj(a, Formula::neg(a)));
  }
  return out;
}

inline std::string print_view(const BeliefView& view, const Signature& sig) {
  std::string out = "[";
  for (std::size_t i = 0; i < view.worlds.size(); ++i) {
    if (i) out += ',';
    out += print_interpretation(view.worlds[i], sig);
  }
  out += ']';
  return out;
}

inline std::string print_views(const std::vector<BeliefView>& views,
                               const Signature& sig) {
  std::string out;
  for (std::size_t i = 0; i < views.size(); ++i) {
    if (i) out += ' ';
    out += print_view(views[i], sig);
  }
  return out.empty() ? "none" : out;
}

}  // namespace epiview

#endif  // EPIVIEW_KD45_HPP
