#ifndef EPIVIEW_FOUNDEDNESS_HPP
#define EPIVIEW_FOUNDEDNESS_HPP

#include <optional>
#include <vector>

#include "epiview/core.hpp"
#include "epiview/kd45.hpp"
#include "epiview/program.hpp"

namespace epiview {

/// One <X, I> pair of an unfounded set: a set X of atoms lacking a
/// justifying rule relative to the belief set I.
struct UnfoundedPair {
  Mask atoms = 0;       // X
  Mask belief_set = 0;  // I

  friend bool operator==(const UnfoundedPair&, const UnfoundedPair&) = default;
};

/// Nonempty set of <X, I> pairs.
struct UnfoundedSet {
  std::vector<UnfoundedPair> pairs;

  Mask atom_union() const {  // Y
    Mask y = 0;
    for (const auto& p : pairs) y |= p.atoms;
    return y;
  }
};

struct FoundednessVerdict {
  bool founded = true;
  std::optional<UnfoundedSet> witness;  // present iff not founded
};

/// Candidate <X, I> pairs for the witness search: either any X meeting
/// I, or only X within I (the shape X = T \ H used by the smaller-model
/// correspondence).
enum class WitnessSearch { full, within_belief_set };

namespace detail {

// A rule justifies <X, I> relative to Y when its head meets X and
//  (1) its body holds at <I, W>,
//  (2) no positive objective body atom lies in X,
//  (3) no head atom outside X lies in I,
//  (4) no positive subjective body atom lies in Y.
inline bool rule_justifies(const Rule& r, const Formula& body, Mask x, Mask i,
                           Mask y, const BeliefView& w) {
  if ((r.head_mask() & x) == 0) return false;
  if ((r.positive_objective_body() & x) != 0) return false;
  if (((r.head_mask() & ~x) & i) != 0) return false;
  if ((r.positive_subjective_body() & y) != 0) return false;
  return kd45_sat(i, w, body);
}

inline std::vector<Formula> rule_bodies(const Program& p) {
  std::vector<Formula> bodies;
  bodies.reserve(p.rules.size());
  for (const auto& r : p.rules) bodies.push_back(r.body_formula());
  return bodies;
}

}  // namespace detail

/// Checks the unfounded-set conditions for u against p and w: every
/// <X, I> pair must lack a justifying rule (with Y the union of all X
/// components of u). Membership of I in w is not required here.
inline bool is_unfounded_set(const UnfoundedSet& u, const Program& p,
                             const BeliefView& w) {
  if (u.pairs.empty()) return false;
  const Mask y = u.atom_union();
  const std::vector<Formula> bodies = detail::rule_bodies(p);
  for (const auto& pair : u.pairs) {
    for (std::size_t ri = 0; ri < p.rules.size(); ++ri) {
      if (detail::rule_justifies(p.rules[ri], bodies[ri], pair.atoms,
                                 pair.belief_set, y, w))
        return false;
    }
  }
  return true;
}

/// Searches for an unfounded set whose pairs are all anchored in w
/// (I in w and X meeting I). The search runs over candidate unions Y in
/// canonical order (size, then atom order); for a fixed Y the pair
/// conditions decouple, so the set of all blocked pairs inside Y is the
/// maximal candidate and is returned when its X components cover Y.
inline std::optional<UnfoundedSet> unfounded_witness(
    const Program& p, const BeliefView& w,
    WitnessSearch mode = WitnessSearch::full) {
  require_enumerable(p.signature);
  const Mask full = p.signature.full_mask();
  const std::vector<Formula> bodies = detail::rule_bodies(p);

  auto blocked = [&](Mask x, Mask i, Mask y) {
    for (std::size_t ri = 0; ri < p.rules.size(); ++ri)
      if (detail::rule_justifies(p.rules[ri], bodies[ri], x, i, y, w))
        return false;
    return true;
  };

  std::vector<Mask> unions;
  for (Mask y = 1; y != 0 && y <= full; ++y) unions.push_back(y);
  std::sort(unions.begin(), unions.end(), [](Mask a, Mask b) {
    if (mask_size(a) != mask_size(b)) return mask_size(a) < mask_size(b);
    return a < b;
  });

  for (Mask y : unions) {
    UnfoundedSet candidate;
    Mask covered = 0;
    for (Mask i : w.worlds) {
      for_each_submask(y, [&](Mask x) {
        if (x == 0 || (x & i) == 0) return;
        if (mode == WitnessSearch::within_belief_set && !mask_subset(x, i))
          return;
        if (blocked(x, i, y)) {
          candidate.pairs.push_back({x, i});
          covered |= x;
        }
      });
    }
    if (covered == y && !candidate.pairs.empty()) {
      std::sort(candidate.pairs.begin(), candidate.pairs.end(),
                [](const UnfoundedPair& a, const UnfoundedPair& b) {
                  if (mask_size(a.atoms) != mask_size(b.atoms))
                    return mask_size(a.atoms) < mask_size(b.atoms);
                  if (a.atoms != b.atoms) return a.atoms < b.atoms;
                  return a.belief_set < b.belief_set;
                });
      return candidate;
    }
  }
  return std::nullopt;
}

/// Foundedness verdict for a world view, with the witness double-checked
/// against the unfounded-set conditions before it is handed out.
inline FoundednessVerdict is_founded(const Program& p, const BeliefView& w,
                                     WitnessSearch mode = WitnessSearch::full) {
  std::optional<UnfoundedSet> witness = unfounded_witness(p, w, mode);
  if (!witness) return {true, std::nullopt};
  if (!is_unfounded_set(*witness, p, w))
    throw std::logic_error("witness fails the unfounded-set conditions");
  for (const auto& pair : witness->pairs) {
    if (!w.contains(pair.belief_set) || (pair.atoms & pair.belief_set) == 0)
      throw std::logic_error("witness pair is not anchored in the view");
  }
  return {false, std::move(witness)};
}

}  // namespace epiview

#endif  // EPIVIEW_FOUNDEDNESS_HPP
