#ifndef EPIVIEW_CORE_HPP
#define EPIVIEW_CORE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace epiview {

/// A set of atoms, encoded as a bit mask over signature indices.
using Mask = std::uint32_t;

inline int mask_size(Mask m) { return std::popcount(m); }
inline bool mask_subset(Mask sub, Mask super) { return (sub & ~super) == 0; }
inline bool mask_proper_subset(Mask sub, Mask super) {
  return sub != super && mask_subset(sub, super);
}

/// Thrown when an exhaustive enumeration is asked to run over a signature
/// larger than the configured cap (or the engine's hard bound).
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(int atom_count, int cap, std::string_view what_enumeration)
      : std::runtime_error("signature has " + std::to_string(atom_count) +
                           " atoms but " + std::string(what_enumeration) +
                           " is capped at " + std::to_string(cap) +
                           " (raise the cap to override)"),
        atom_count(atom_count),
        cap(cap) {}
  int atom_count;
  int cap;
};

/// Thrown when a modal operator reaches a purely classical evaluation.
class ModalInClassicalContext : public std::logic_error {
 public:
  ModalInClassicalContext()
      : std::logic_error("modal operator in classical/HT context") {}
};

/// Ordered set of named atoms. The index of an atom is stable for the
/// lifetime of the signature; first mention defines the canonical order.
class Signature {
 public:
  static constexpr int default_enumeration_cap = 4;
  // Bulk evaluation keeps one bit per interpretation in a 64-bit word.
  static constexpr int engine_atom_limit = 6;

  /// Adds an atom (no-op if present) and returns its index.
  int add(std::string_view name) {
    auto it = index_.find(std::string(name));
    if (it != index_.end()) return it->second;
    int idx = static_cast<int>(names_.size());
    names_.emplace_back(name);
    index_.emplace(names_.back(), idx);
    return idx;
  }

  /// Index of `name`, or -1.
  int find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : it->second;
  }

  int size() const { return static_cast<int>(names_.size()); }
  bool empty() const { return names_.empty(); }
  const std::string& name(int index) const { return names_.at(index); }

  Mask full_mask() const {
    return size() == 0 ? 0 : (Mask{1} << size()) - 1;
  }

  int enumeration_cap() const { return cap_; }
  void set_enumeration_cap(int cap) {
    if (cap < 1) throw std::invalid_argument("enumeration cap must be positive");
    cap_ = cap;
  }

  bool operator==(const Signature& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  int cap_ = default_enumeration_cap;
};

/// Guards every exhaustive enumeration over 2^|sig| interpretations.
inline void require_enumerable(const Signature& sig) {
  if (sig.size() > sig.enumeration_cap())
    throw CapExceeded(sig.size(), sig.enumeration_cap(), "enumeration");
  if (sig.size() > Signature::engine_atom_limit)
    throw CapExceeded(sig.size(), Signature::engine_atom_limit,
                      "the evaluation engine");
}

/// Guards enumerations over all 2^(2^|sig|) candidate views.
inline constexpr int view_enumeration_atom_limit = 4;
inline void require_view_enumerable(const Signature& sig) {
  require_enumerable(sig);
  if (sig.size() > view_enumeration_atom_limit)
    throw CapExceeded(sig.size(), view_enumeration_atom_limit,
                      "exhaustive view enumeration");
}

/// Here-and-there pair <H,T> with H included in T; total when H == T.
struct HTPair {
  Mask here = 0;
  Mask there = 0;

  bool total() const { return here == there; }
  bool valid() const { return mask_subset(here, there); }

  friend bool operator==(const HTPair&, const HTPair&) = default;
  friend auto operator<=>(const HTPair& a, const HTPair& b) {
    if (auto c = a.there <=> b.there; c != 0) return c;
    return a.here <=> b.here;
  }
};

inline void canonicalize(std::vector<Mask>& worlds) {
  std::sort(worlds.begin(), worlds.end());
  worlds.erase(std::unique(worlds.begin(), worlds.end()), worlds.end());
}

inline void canonicalize(std::vector<HTPair>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

/// Iterates sub over all submasks of m, including 0 and m itself.
template <typename F>
void for_each_submask(Mask m, F&& fn) {
  Mask sub = m;
  while (true) {
    fn(sub);
    if (sub == 0) break;
    sub = (sub - 1) & m;
  }
}

}  // namespace epiview

#endif  // EPIVIEW_CORE_HPP
