#ifndef EPIVIEW_JSON_IO_HPP
#define EPIVIEW_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "epiview/core.hpp"
#include "epiview/foundedness.hpp"
#include "epiview/kd45.hpp"

namespace epiview {

using Json = nlohmann::json;

inline Json interpretation_to_json(Mask m, const Signature& sig) {
  Json arr = Json::array();
  for (int i = 0; i < sig.size(); ++i)
    if (m & (Mask{1} << i)) arr.push_back(sig.name(i));
  return arr;
}

inline Json view_to_json(const BeliefView& w, const Signature& sig) {
  Json arr = Json::array();
  for (Mask m : w.worlds) arr.push_back(interpretation_to_json(m, sig));
  return arr;
}

inline Json views_to_json(const std::vector<BeliefView>& views,
                          const Signature& sig) {
  Json arr = Json::array();
  for (const auto& w : views) arr.push_back(view_to_json(w, sig));
  return arr;
}

inline Mask interpretation_from_json(const Json& j, const Signature& sig) {
  Mask m = 0;
  for (const auto& name : j) {
    int idx = sig.find(name.get<std::string>());
    if (idx < 0)
      throw std::invalid_argument("unknown atom '" + name.get<std::string>() +
                                  "' in world-view JSON");
    m |= Mask{1} << idx;
  }
  return m;
}

inline BeliefView view_from_json(const Json& j, const Signature& sig) {
  std::vector<Mask> worlds;
  for (const auto& w : j) worlds.push_back(interpretation_from_json(w, sig));
  return BeliefView::of(std::move(worlds));
}

inline std::vector<BeliefView> views_from_json(const Json& j,
                                               const Signature& sig) {
  std::vector<BeliefView> out;
  for (const auto& v : j) out.push_back(view_from_json(v, sig));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Json witness_to_json(const UnfoundedSet& u, const Signature& sig) {
  Json arr = Json::array();
  for (const auto& p : u.pairs) {
    Json pair;
    pair["X"] = interpretation_to_json(p.atoms, sig);
    pair["I"] = interpretation_to_json(p.belief_set, sig);
    arr.push_back(std::move(pair));
  }
  return arr;
}

}  // namespace epiview

#endif  // EPIVIEW_JSON_IO_HPP
