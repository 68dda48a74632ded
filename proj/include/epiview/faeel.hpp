#ifndef EPIVIEW_FAEEL_HPP
#define EPIVIEW_FAEEL_HPP

#include <unordered_map>
#include <vector>

#include "epiview/core.hpp"
#include "epiview/formula.hpp"
#include "epiview/foundedness.hpp"
#include "epiview/kd45.hpp"

namespace epiview {

/// Set of HT pairs, kept sorted. Belief views over HT pairs must be
/// nonempty; operations assert this where it matters.
struct HTView {
  std::vector<HTPair> pairs;

  static HTView of(std::vector<HTPair> pairs) {
    for (const auto& p : pairs)
      if (!p.valid()) throw std::invalid_argument("HT pair needs here <= there");
    canonicalize(pairs);
    return HTView{std::move(pairs)};
  }
  static HTView total_of(const BeliefView& w) {
    std::vector<HTPair> pairs;
    pairs.reserve(w.worlds.size());
    for (Mask t : w.worlds) pairs.push_back({t, t});
    return HTView{std::move(pairs)};
  }

  bool total() const {
    for (const auto& p : pairs)
      if (!p.total()) return false;
    return true;
  }
  /// There-components, as a total belief view.
  BeliefView t_projection() const {
    std::vector<Mask> worlds;
    worlds.reserve(pairs.size());
    for (const auto& p : pairs) worlds.push_back(p.there);
    return BeliefView::of(std::move(worlds));
  }

  friend bool operator==(const HTView&, const HTView&) = default;
};

struct HTBeliefInterpretation {
  HTPair real_world;
  HTView view;
};

namespace detail {

inline bool faeel_sat_impl(const HTPair& rw, const HTView& view,
                           const BeliefView& t_proj, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::bottom:
      return false;
    case FormulaKind::atom:
      return (rw.here >> f.atom_index()) & 1;
    case FormulaKind::conj:
      return faeel_sat_impl(rw, view, t_proj, f.lhs()) &&
             faeel_sat_impl(rw, view, t_proj, f.rhs());
    case FormulaKind::disj:
      return faeel_sat_impl(rw, view, t_proj, f.lhs()) ||
             faeel_sat_impl(rw, view, t_proj, f.rhs());
    case FormulaKind::impl:
      // (i) locally here, (ii) at <T, view^t> in the KD45 sense.
      return kd45_sat(rw.there, t_proj, f) &&
             (!faeel_sat_impl(rw, view, t_proj, f.lhs()) ||
              faeel_sat_impl(rw, view, t_proj, f.rhs()));
    case FormulaKind::modal:
      for (const auto& p : view.pairs)
        if (!faeel_sat_impl(p, view, t_proj, f.operand())) return false;
      return true;
  }
  return false;
}

}  // namespace detail

/// Satisfaction at the HT belief interpretation <<H,T>, view>. Collapses
/// to kd45_sat when everything is total.
inline bool faeel_sat(const HTPair& rw, const HTView& view, const Formula& f) {
  if (view.pairs.empty())
    throw std::invalid_argument("a belief view holds at least one HT pair");
  return detail::faeel_sat_impl(rw, view, view.t_projection(), f);
}

inline bool faeel_sat(const HTBeliefInterpretation& bi, const Formula& f) {
  return faeel_sat(bi.real_world, bi.view, f);
}

/// Every formula of g holds at every pair of the view and at the real
/// world.
inline bool is_ht_belief_model(const HTPair& rw, const HTView& view,
                               const Theory& g) {
  if (view.pairs.empty())
    throw std::invalid_argument("a belief view holds at least one HT pair");
  const BeliefView t_proj = view.t_projection();
  for (const auto& f : g.formulas) {
    if (!detail::faeel_sat_impl(rw, view, t_proj, f)) return false;
    for (const auto& p : view.pairs)
      if (!detail::faeel_sat_impl(p, view, t_proj, f)) return false;
  }
  return true;
}

inline bool is_ht_belief_model(const HTBeliefInterpretation& bi, const Theory& g) {
  return is_ht_belief_model(bi.real_world, bi.view, g);
}

/// The information order on belief interpretations: lo <= hi iff the real
/// worlds share a there-component with lo's here below hi's, and the two
/// views dominate each other pairwise at equal there-components.
inline bool leq(const HTBeliefInterpretation& lo,
                const HTBeliefInterpretation& hi) {
  if (lo.real_world.there != hi.real_world.there) return false;
  if (!mask_subset(lo.real_world.here, hi.real_world.here)) return false;
  for (const auto& q : hi.view.pairs) {
    bool dominated = false;
    for (const auto& p : lo.view.pairs)
      if (p.there == q.there && mask_subset(p.here, q.here)) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  for (const auto& p : lo.view.pairs) {
    bool covered = false;
    for (const auto& q : hi.view.pairs)
      if (q.there == p.there && mask_subset(p.here, q.here)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

inline bool lt(const HTBeliefInterpretation& lo,
               const HTBeliefInterpretation& hi) {
  if (!leq(lo, hi)) return false;
  return !(lo.real_world == hi.real_world && lo.view == hi.view);
}

namespace detail {

// Evaluation context for one total view W. Minimality questions about
// <T0, W> only involve interpretations whose view has there-projection
// exactly W and whose real world keeps T0 (the order fixes both), so the
// candidate space is: one nonempty set of here-sets per world of W, plus
// a real-world here-set. Candidates are explored by guessing the truth
// of every distinct modal subformula (2^k assignments); under a fixed
// guess the pairs decouple, the maximal admissible family decides the
// guess, and the guess is kept only if that family reproduces it.
class TotalViewAnalyzer {
 public:
  TotalViewAnalyzer(const Theory& g, const Signature& sig, BeliefView view)
      : g_(g), view_(std::move(view)), n_(sig.size()) {
    require_enumerable(sig);
    universe_ = (n_ >= 6) ? ~std::uint64_t{0}
                          : ((std::uint64_t{1} << (1u << n_)) - 1);
    full_ = sig.full_mask();
    for (const auto& f : g_.formulas) kd45_set(f);
    if (modal_classes_.size() > 16)
      throw CapExceeded(static_cast<int>(modal_classes_.size()), 16,
                        "modal-subformula guessing");
    view_models_ = true;
    belief_roots_ = universe_;
    for (const auto& f : g_.formulas) {
      const std::uint64_t set = kd45_set(f);
      belief_roots_ &= set;
      for (Mask j : view_.worlds) view_models_ &= ((set >> j) & 1) != 0;
    }
    strict_below_.assign(std::size_t{1} << n_, 0);
    if (view_models_) run();
  }

  /// Every world of the view satisfies g under the view.
  bool view_models_theory() const { return view_models_; }

  /// <t0, W> is a belief model of g.
  bool is_total_belief_model(Mask t0) const {
    return view_models_ && ((belief_roots_ >> t0) & 1);
  }

  /// Some belief model of g lies strictly below <t0, W>.
  bool has_strictly_smaller_belief_model(Mask t0) const {
    return strict_below_[t0] != 0;
  }

  /// Some HT view strictly below W (no real world involved) has all its
  /// pairs satisfying g.
  bool has_strictly_smaller_view_model() const { return strict_view_below_; }

 private:
  // KD45 truth of f at <T, W> for every T, one bit per interpretation.
  std::uint64_t kd45_set(const Formula& f) {
    auto it = sets_.find(f.id());
    if (it != sets_.end()) return it->second;
    std::uint64_t s = 0;
    switch (f.kind()) {
      case FormulaKind::bottom:
        s = 0;
        break;
      case FormulaKind::atom: {
        for (Mask t = 0; t <= full_; ++t)
          if ((t >> f.atom_index()) & 1) s |= std::uint64_t{1} << t;
        break;
      }
      case FormulaKind::conj:
        s = kd45_set(f.lhs()) & kd45_set(f.rhs());
        break;
      case FormulaKind::disj:
        s = kd45_set(f.lhs()) | kd45_set(f.rhs());
        break;
      case FormulaKind::impl:
        s = (~kd45_set(f.lhs()) | kd45_set(f.rhs())) & universe_;
        break;
      case FormulaKind::modal: {
        const std::uint64_t sub = kd45_set(f.operand());
        bool all = true;
        for (Mask j : view_.worlds) all &= ((sub >> j) & 1) != 0;
        s = all ? universe_ : 0;
        int idx = -1;
        for (std::size_t i = 0; i < modal_classes_.size(); ++i)
          if (modal_classes_[i] == f) idx = static_cast<int>(i);
        if (idx < 0) {
          idx = static_cast<int>(modal_classes_.size());
          modal_classes_.push_back(f);
        }
        modal_index_[f.id()] = idx;
        break;
      }
    }
    sets_.emplace(f.id(), s);
    return s;
  }

  bool sat_guess(Mask h, Mask t, const Formula& f, std::uint32_t guess) const {
    switch (f.kind()) {
      case FormulaKind::bottom:
        return false;
      case FormulaKind::atom:
        return (h >> f.atom_index()) & 1;
      case FormulaKind::conj:
        return sat_guess(h, t, f.lhs(), guess) && sat_guess(h, t, f.rhs(), guess);
      case FormulaKind::disj:
        return sat_guess(h, t, f.lhs(), guess) || sat_guess(h, t, f.rhs(), guess);
      case FormulaKind::impl:
        return ((sets_.at(f.id()) >> t) & 1) &&
               (!sat_guess(h, t, f.lhs(), guess) ||
                sat_guess(h, t, f.rhs(), guess));
      case FormulaKind::modal:
        return (guess >> modal_index_.at(f.id())) & 1;
    }
    return false;
  }

  bool admissible(Mask h, Mask t, std::uint32_t guess) const {
    for (const auto& f : g_.formulas)
      if (!sat_guess(h, t, f, guess)) return false;
    return true;
  }

  void run() {
    const std::size_t k = modal_classes_.size();
    for (std::uint32_t guess = 0; guess < (std::uint32_t{1} << k); ++guess) {
      // Pass over candidate view pairs (worlds of W keep their
      // there-component). A pair joins the family when it satisfies g and
      // every modal guessed true; after the pass, every modal guessed
      // false needs a refuting family member and every world needs at
      // least one pair.
      bool covered = true;
      bool any_non_total = false;
      std::uint32_t refuted = 0;
      const std::uint32_t want_refuted =
          static_cast<std::uint32_t>((std::uint32_t{1} << k) - 1) & ~guess;
      for (Mask t : view_.worlds) {
        bool any = false;
        for_each_submask(t, [&](Mask h) {
          if (!admissible(h, t, guess)) return;
          for (std::size_t i = 0; i < k; ++i)
            if ((guess >> i) & 1) {
              if (!sat_guess(h, t, modal_classes_[i].operand(), guess)) return;
            }
          any = true;
          if (h != t) any_non_total = true;
          for (std::size_t i = 0; i < k; ++i)
            if (!((guess >> i) & 1) &&
                !sat_guess(h, t, modal_classes_[i].operand(), guess))
              refuted |= std::uint32_t{1} << i;
        });
        if (!any) {
          covered = false;
          break;
        }
      }
      if (!covered || refuted != want_refuted) continue;

      const bool family_is_total = !any_non_total;
      if (!family_is_total) strict_view_below_ = true;

      // Real-world pass: any admissible here-set works when the family
      // already differs from the total view; otherwise only a strictly
      // smaller real world makes the interpretation differ.
      for (Mask t0 = 0;; ++t0) {
        if (!strict_below_[t0]) {
          for_each_submask(t0, [&](Mask h) {
            if (strict_below_[t0]) return;
            if (family_is_total && h == t0) return;
            if (admissible(h, t0, guess)) strict_below_[t0] = 1;
          });
        }
        if (t0 == full_) break;
      }
    }
  }

  const Theory& g_;
  BeliefView view_;
  int n_;
  Mask full_ = 0;
  std::uint64_t universe_ = 0;
  std::unordered_map<const void*, std::uint64_t> sets_;
  std::unordered_map<const void*, int> modal_index_;
  std::vector<Formula> modal_classes_;
  std::uint64_t belief_roots_ = 0;
  bool view_models_ = false;
  std::vector<char> strict_below_;
  bool strict_view_below_ = false;
};

}  // namespace detail

/// Members of EQB[g] over the total view w: all T whose total belief
/// interpretation <T, w> is a belief model of g with no strictly smaller
/// belief model.
inline std::vector<Mask> eqb_members(const Theory& g, const BeliefView& w,
                                     const Signature& sig) {
  detail::TotalViewAnalyzer analyzer(g, sig, w);
  std::vector<Mask> out;
  const Mask full = sig.full_mask();
  for (Mask t = 0;; ++t) {
    if (analyzer.is_total_belief_model(t) &&
        !analyzer.has_strictly_smaller_belief_model(t))
      out.push_back(t);
    if (t == full) break;
  }
  return out;
}

/// Whether <t, w> is an equilibrium belief model of g.
inline bool is_equilibrium_belief_model(Mask t, const BeliefView& w,
                                        const Theory& g, const Signature& sig) {
  detail::TotalViewAnalyzer analyzer(g, sig, w);
  return analyzer.is_total_belief_model(t) &&
         !analyzer.has_strictly_smaller_belief_model(t);
}

struct FaeelOptions {
  /// Restrict fixpoint candidates to the G91 world views. Equilibrium
  /// world views are always G91 world views, so this is exact; the
  /// unrestricted sweep stays available as the reference path.
  bool prune_with_g91 = true;
};

/// Equilibrium world views: nonempty total views w with
/// w == { T : <T, w> in EQB[g] }.
inline std::vector<BeliefView> faeel_world_views(const Theory& g,
                                                 const Signature& sig,
                                                 FaeelOptions options = {}) {
  std::vector<BeliefView> out;
  if (options.prune_with_g91) {
    for (const auto& w : g91_world_views(g, sig))
      if (eqb_members(g, w, sig) == w.worlds) out.push_back(w);
    return out;
  }
  require_view_enumerable(sig);
  const Mask full = sig.full_mask();
  const std::uint64_t interp_count = std::uint64_t{1} << (full == 0 ? 0 : sig.size());
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << interp_count); ++bits) {
    std::vector<Mask> worlds;
    for (Mask t = 0;; ++t) {
      if ((bits >> t) & 1) worlds.push_back(t);
      if (t == full) break;
    }
    BeliefView w = BeliefView::of(std::move(worlds));
    if (!is_epistemic_model(w, g)) continue;  // every member must model g
    if (eqb_members(g, w, sig) == w.worlds) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Program route. The fast path takes the founded G91 world views; the
/// generic path runs the equilibrium fixpoint on the rule formulas. The
/// two agree.
inline std::vector<BeliefView> faeel_world_views(const Program& p,
                                                 const Signature& sig,
                                                 bool fast_path = true) {
  if (!fast_path) return faeel_world_views(program_to_theory(p), sig);
  std::vector<BeliefView> out;
  for (const auto& w : g91_world_views(program_to_theory(p), sig))
    if (is_founded(p, w).founded) out.push_back(w);
  return out;
}

}  // namespace epiview

#endif  // EPIVIEW_FAEEL_HPP
