#include "ykm/branching.hpp"

namespace ykm {

namespace {

std::string hweight_str(const HWeight& w) {
  std::string s = "[";
  for (size_t i = 0; i < w.labels.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.labels[i]);
  }
  s += "]_" + w.charge.get_str();
  return s;
}

}  // namespace

HIrrepSum peel_h_irreps(const HAlgebra& h, HWeightMultiset residual, std::size_t cap) {
  HIrrepSum out;
  while (!residual.empty()) {
    // dominance-maximal residual weight: maximal height, ties broken
    // lexicographically on (charge, labels) descending
    const HWeight* best = nullptr;
    long best_height = 0;
    for (const auto& [w, m] : residual) {
      if (m == 0) continue;
      long ht = h_height_num(h, w.labels);
      if (!best || ht > best_height ||
          (ht == best_height && (w.charge > best->charge ||
                                 (w.charge == best->charge && w.labels > best->labels)))) {
        best = &w;
        best_height = ht;
      }
    }
    if (!best) break;
    HWeight top = *best;
    Int mult = residual.at(top);
    if (mult < 0)
      fail(errc::non_dominant_projection,
           "negative residual multiplicity at " + hweight_str(top) + "; projection is not a branching");
    HIrrep hw = h_unflatten(h, top);
    if (!h_is_dominant(h, hw))
      fail(errc::non_dominant_projection,
           "maximal residual weight " + hweight_str(top) + " is not h-dominant");
    const auto ws = h_weight_system(h, hw, cap);
    for (const auto& [w, m] : ws) {
      auto it = residual.find(w);
      Int sub = mult * m;
      if (it == residual.end() || it->second < sub)
        fail(errc::non_dominant_projection,
             "character subtraction went negative at " + hweight_str(w) +
                 "; projection is not a branching");
      it->second -= sub;
      if (it->second == 0) residual.erase(it);
    }
    out[hw] += mult;
  }
  return out;
}

HIrrepSum restrict_weight(const RootSystem& g, const HAlgebra& h, const Projection& proj,
                          const Weight& hw, std::size_t cap) {
  if (!g.is_dominant(hw)) fail(errc::not_dominant, "restrict: weight not dominant");
  const auto& weights = cached_weights(g.type(), hw, cap);
  HWeightMultiset projected;
  std::size_t total = 0;
  for (const auto& [w, m] : weights) {
    projected[proj.apply(w)] += m;
    if (++total > cap) fail(errc::resource_limit, "projected weight system exceeds cap");
  }
  return peel_h_irreps(h, std::move(projected), cap);
}

}  // namespace ykm
