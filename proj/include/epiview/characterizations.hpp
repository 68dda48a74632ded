#ifndef EPIVIEW_CHARACTERIZATIONS_HPP
#define EPIVIEW_CHARACTERIZATIONS_HPP

#include <vector>

#include "epiview/core.hpp"
#include "epiview/faeel.hpp"
#include "epiview/kd45.hpp"

namespace epiview {

/// S5-style view over HT pairs: no distinguished real world.
using S5HTView = HTView;

/// Semi-total: every view pair is total; the real world may not be.
inline bool is_semi_total(const HTBeliefInterpretation& bi) {
  return bi.view.total();
}

/// Every pair of w satisfies every formula of g under w. w must be
/// nonempty.
inline bool s5ht_is_model(const S5HTView& w, const Theory& g) {
  if (w.pairs.empty())
    throw std::invalid_argument("an S5-HT view holds at least one pair");
  const BeliefView t_proj = w.t_projection();
  for (const auto& f : g.formulas)
    for (const auto& p : w.pairs)
      if (!detail::faeel_sat_impl(p, w, t_proj, f)) return false;
  return true;
}

/// w1 <= w2: mutual domination at equal there-components.
inline bool s5_view_order(const S5HTView& w1, const S5HTView& w2) {
  for (const auto& q : w2.pairs) {
    bool dominated = false;
    for (const auto& p : w1.pairs)
      if (p.there == q.there && mask_subset(p.here, q.here)) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  for (const auto& p : w1.pairs) {
    bool covered = false;
    for (const auto& q : w2.pairs)
      if (q.there == p.there && mask_subset(p.here, q.here)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

/// Total S5-HT models of g with no strictly smaller S5-HT model.
inline std::vector<BeliefView> s5_equilibrium_models(const Theory& g,
                                                     const Signature& sig) {
  require_view_enumerable(sig);
  std::vector<BeliefView> out;
  const Mask full = sig.full_mask();
  const std::uint64_t interp_count =
      std::uint64_t{1} << (sig.size() == 0 ? 0 : sig.size());
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << interp_count); ++bits) {
    std::vector<Mask> worlds;
    for (Mask t = 0;; ++t) {
      if ((bits >> t) & 1) worlds.push_back(t);
      if (t == full) break;
    }
    BeliefView w = BeliefView::of(std::move(worlds));
    if (!is_epistemic_model(w, g)) continue;  // total S5-HT model check
    detail::TotalViewAnalyzer analyzer(g, sig, w);
    if (analyzer.has_strictly_smaller_view_model()) continue;
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Satisfaction at the semi-total interpretation <<H,T>, total(w)>: view
// pairs are total, so modal subformulas take their KD45 value under w.
inline bool semi_total_sat(Mask h, Mask t, const BeliefView& w,
                           const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::bottom:
      return false;
    case FormulaKind::atom:
      return (h >> f.atom_index()) & 1;
    case FormulaKind::conj:
      return semi_total_sat(h, t, w, f.lhs()) && semi_total_sat(h, t, w, f.rhs());
    case FormulaKind::disj:
      return semi_total_sat(h, t, w, f.lhs()) || semi_total_sat(h, t, w, f.rhs());
    case FormulaKind::impl:
      return kd45_sat(t, w, f) && (!semi_total_sat(h, t, w, f.lhs()) ||
                                   semi_total_sat(h, t, w, f.rhs()));
    case FormulaKind::modal:
      return epistemic_sat(w, f.operand());
  }
  return false;
}

}  // namespace detail

/// <t, w> is a weak KD45-equilibrium model: a belief model of g with no
/// strictly smaller semi-total model. A semi-total competitor keeps the
/// view total (the order pins it to w) and only shrinks the real world.
inline bool is_weak_eqb(Mask t, const BeliefView& w, const Theory& g) {
  if (!is_belief_model({t, w}, g)) return false;
  bool smaller = false;
  for_each_submask(t, [&](Mask h) {
    if (smaller || h == t) return;
    bool models = true;
    for (const auto& f : g.formulas)
      if (!detail::semi_total_sat(h, t, w, f)) {
        models = false;
        break;
      }
    if (models) smaller = true;
  });
  return !smaller;
}

/// Weak autoepistemic world views: nonempty total w whose members are
/// exactly the weak KD45-equilibrium real worlds over w.
inline std::vector<BeliefView> weak_world_views(const Theory& g,
                                                const Signature& sig) {
  require_view_enumerable(sig);
  std::vector<BeliefView> out;
  const Mask full = sig.full_mask();
  const std::uint64_t interp_count =
      std::uint64_t{1} << (sig.size() == 0 ? 0 : sig.size());
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << interp_count); ++bits) {
    std::vector<Mask> worlds;
    for (Mask t = 0;; ++t) {
      if ((bits >> t) & 1) worlds.push_back(t);
      if (t == full) break;
    }
    BeliefView w = BeliefView::of(std::move(worlds));
    if (!is_epistemic_model(w, g)) continue;  // members must be belief models
    bool fixpoint = true;
    for (Mask t = 0; fixpoint; ++t) {
      if (is_weak_eqb(t, w, g) != w.contains(t)) fixpoint = false;
      if (t == full) break;
    }
    if (fixpoint) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace epiview

#endif  // EPIVIEW_CHARACTERIZATIONS_HPP
