#include "ykm/tensor.hpp"

namespace ykm {

namespace {

// signed sum over the weight system of the smaller factor
IrrepSum klimyk(const RootSystem& rs, const Weight& lam, const Weight& mu, std::size_t cap) {
  const auto& weights = cached_weights(rs.type(), mu, cap);
  int n = rs.rank();
  IrrepSum out;
  for (const auto& [nu, m] : weights) {
    Weight w(lam);
    for (int i = 0; i < n; ++i) w[i] += nu[i];
    auto [dom, sign] = rs.reflect_to_dominant(w);
    if (sign == 0) continue;
    auto it = out.find(dom);
    if (it == out.end())
      out.emplace(dom, sign > 0 ? m : -m);
    else {
      it->second += sign > 0 ? m : -m;
      if (it->second == 0) out.erase(it);
    }
  }
  for (const auto& [w, m] : out) {
    if (m < 0) fail(errc::validation_failure, "tensor decomposition produced negative multiplicity");
  }
  return out;
}

}  // namespace

IrrepSum tensor_decompose(const RootSystem& rs, const Weight& lam, const Weight& mu,
                          std::size_t cap) {
  if (!rs.is_dominant(lam) || !rs.is_dominant(mu))
    fail(errc::not_dominant, "tensor_decompose: weights must be dominant");
  if (rs.dimension(mu) <= rs.dimension(lam)) return klimyk(rs, lam, mu, cap);
  return klimyk(rs, mu, lam, cap);
}

Int tensor_multiplicity(const RootSystem& rs, const Weight& target, const Weight& lam,
                        const Weight& mu, std::size_t cap) {
  auto sum = tensor_decompose(rs, lam, mu, cap);
  auto it = sum.find(target);
  return it == sum.end() ? Int(0) : it->second;
}

}  // namespace ykm
