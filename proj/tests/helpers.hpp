#ifndef EPIVIEW_TESTS_HELPERS_HPP
#define EPIVIEW_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "epiview/epiview.hpp"

namespace epiview::testing {

inline Signature make_signature(std::initializer_list<const char*> names) {
  Signature sig;
  for (const char* n : names) sig.add(n);
  return sig;
}

inline Mask atoms(const Signature& sig, std::initializer_list<const char*> names) {
  Mask m = 0;
  for (const char* n : names) {
    int idx = sig.find(n);
    if (idx < 0) throw std::logic_error(std::string("test atom missing: ") + n);
    m |= Mask{1} << idx;
  }
  return m;
}

inline BeliefView view_of(std::initializer_list<Mask> worlds) {
  return BeliefView::of(std::vector<Mask>(worlds));
}

inline HTView ht_view(std::initializer_list<HTPair> pairs) {
  return HTView::of(std::vector<HTPair>(pairs));
}

/// Depth-bounded random formula over atom indices [0, natoms).
inline Formula random_formula(std::mt19937_64& rng, int natoms, int depth,
                              bool allow_modal) {
  auto pick = [&rng](int n) { return static_cast<int>(rng() % n); };
  if (depth == 0 || pick(4) == 0) {
    if (natoms == 0 || pick(6) == 0) return pick(2) ? Formula::top() : Formula::bottom();
    return Formula::atom(pick(natoms));
  }
  switch (pick(allow_modal ? 5 : 4)) {
    case 0:
      return Formula::conj(random_formula(rng, natoms, depth - 1, allow_modal),
                           random_formula(rng, natoms, depth - 1, allow_modal));
    case 1:
      return Formula::disj(random_formula(rng, natoms, depth - 1, allow_modal),
                           random_formula(rng, natoms, depth - 1, allow_modal));
    case 2:
      return Formula::impl(random_formula(rng, natoms, depth - 1, allow_modal),
                           random_formula(rng, natoms, depth - 1, allow_modal));
    case 3:
      return Formula::neg(random_formula(rng, natoms, depth - 1, allow_modal));
    default:
      return Formula::modal(random_formula(rng, natoms, depth - 1, allow_modal));
  }
}

inline Mask random_mask(std::mt19937_64& rng, Mask full) {
  return static_cast<Mask>(rng()) & full;
}

inline BeliefView random_view(std::mt19937_64& rng, Mask full) {
  std::vector<Mask> worlds;
  int count = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < count; ++i) worlds.push_back(random_mask(rng, full));
  return BeliefView::of(std::move(worlds));
}

inline HTPair random_pair(std::mt19937_64& rng, Mask full) {
  Mask there = random_mask(rng, full);
  Mask here = random_mask(rng, full) & there;
  return {here, there};
}

inline HTView random_ht_view(std::mt19937_64& rng, Mask full) {
  std::vector<HTPair> pairs;
  int count = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < count; ++i) pairs.push_back(random_pair(rng, full));
  return HTView::of(std::move(pairs));
}

}  // namespace epiview::testing

#endif  // EPIVIEW_TESTS_HELPERS_HPP
