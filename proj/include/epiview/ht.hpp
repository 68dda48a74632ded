#ifndef EPIVIEW_HT_HPP
#define EPIVIEW_HT_HPP

#include <vector>

#include "epiview/core.hpp"
#include "epiview/formula.hpp"

namespace epiview {

/// Classical satisfaction T |= f. f must be modal-free.
inline bool classical_sat(Mask t, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::bottom:
      return false;
    case FormulaKind::atom:
      return (t >> f.atom_index()) & 1;
    case FormulaKind::conj:
      return classical_sat(t, f.lhs()) && classical_sat(t, f.rhs());
    case FormulaKind::disj:
      return classical_sat(t, f.lhs()) || classical_sat(t, f.rhs());
    case FormulaKind::impl:
      return !classical_sat(t, f.lhs()) || classical_sat(t, f.rhs());
    case FormulaKind::modal:
      throw ModalInClassicalContext();
  }
  return false;
}

/// Here-and-there satisfaction <H,T> |= f. Implication holds when the
/// classical condition holds at T and the local condition holds at <H,T>.
inline bool ht_sat(const HTPair& p, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::bottom:
      return false;
    case FormulaKind::atom:
      return (p.here >> f.atom_index()) & 1;
    case FormulaKind::conj:
      return ht_sat(p, f.lhs()) && ht_sat(p, f.rhs());
    case FormulaKind::disj:
      return ht_sat(p, f.lhs()) || ht_sat(p, f.rhs());
    case FormulaKind::impl:
      return classical_sat(p.there, f) &&
             (!ht_sat(p, f.lhs()) || ht_sat(p, f.rhs()));
    case FormulaKind::modal:
      throw ModalInClassicalContext();
  }
  return false;
}

inline bool classical_sat(Mask t, const Theory& g) {
  for (const auto& f : g.formulas)
    if (!classical_sat(t, f)) return false;
  return true;
}

inline bool ht_sat(const HTPair& p, const Theory& g) {
  for (const auto& f : g.formulas)
    if (!ht_sat(p, f)) return false;
  return true;
}

/// CL[g]: all classical models of a modal-free theory, in canonical order.
inline std::vector<Mask> classical_models(const Theory& g, const Signature& sig) {
  require_enumerable(sig);
  std::vector<Mask> out;
  const Mask full = sig.full_mask();
  for (Mask t = 0;; ++t) {
    if (classical_sat(t, g)) out.push_back(t);
    if (t == full) break;
  }
  return out;
}

/// SM[g]: total HT models with no strictly smaller here-component model.
/// SM[g] is a subset of CL[g] by construction.
inline std::vector<Mask> stable_models(const Theory& g, const Signature& sig) {
  require_enumerable(sig);
  std::vector<Mask> out;
  const Mask full = sig.full_mask();
  for (Mask t = 0;; ++t) {
    if (classical_sat(t, g)) {
      bool minimal = true;
      for (Mask h = (t - 1) & t; t != 0 && minimal; h = (h - 1) & t) {
        if (ht_sat({h, t}, g)) minimal = false;
        if (h == 0) break;
      }
      if (minimal) out.push_back(t);
    }
    if (t == full) break;
  }
  return out;
}

}  // namespace epiview

#endif  // EPIVIEW_HT_HPP
