#include "ykm/halgebra.hpp"

#include <numeric>

namespace ykm {

HIrrep h_trivial(const HAlgebra& h) {
  HIrrep w;
  for (const auto& f : h.factors) w.labels.push_back(Weight(f.rank, 0));
  w.charge = 0;
  return w;
}

bool h_is_dominant(const HAlgebra& h, const HIrrep& w) {
  for (size_t i = 0; i < h.factors.size(); ++i)
    if (!root_system(h.factors[i]).is_dominant(w.labels[i])) return false;
  return true;
}

Int h_dim(const HAlgebra& h, const HIrrep& w) {
  Int d(1);
  for (size_t i = 0; i < h.factors.size(); ++i)
    d *= root_system(h.factors[i]).dimension(w.labels[i]);
  return d;
}

HIrrep h_conjugate(const HAlgebra& h, const HIrrep& w) {
  HIrrep c;
  for (size_t i = 0; i < h.factors.size(); ++i)
    c.labels.push_back(root_system(h.factors[i]).conjugate(w.labels[i]));
  c.charge = -w.charge;
  return c;
}

HIrrep h_factor_adjoint(const HAlgebra& h, size_t i) {
  HIrrep w = h_trivial(h);
  w.labels[i] = root_system(h.factors[i]).highest_root();
  return w;
}

Int h_contains(const HAlgebra& h, const HIrrep& target, const HIrrep& a, const HIrrep& b,
               std::size_t cap) {
  if (target.charge != a.charge + b.charge) return 0;
  Int m(1);
  for (size_t i = 0; i < h.factors.size() && m != 0; ++i) {
    const auto& rs = root_system(h.factors[i]);
    m *= tensor_multiplicity(rs, target.labels[i], a.labels[i], b.labels[i], cap);
  }
  return m;
}

HWeightMultiset h_weight_system(const HAlgebra& h, const HIrrep& w, std::size_t cap) {
  std::vector<std::vector<std::pair<Weight, Int>>> per_factor;
  for (size_t i = 0; i < h.factors.size(); ++i) {
    const auto& ws = cached_weights(h.factors[i], w.labels[i], cap);
    per_factor.emplace_back(ws.begin(), ws.end());
  }
  HWeightMultiset out;
  std::vector<size_t> idx(per_factor.size(), 0);
  std::size_t produced = 0;
  while (true) {
    HWeight hw;
    Int m(1);
    for (size_t i = 0; i < per_factor.size(); ++i) {
      const auto& [wt, mult] = per_factor[i][idx[i]];
      hw.labels.insert(hw.labels.end(), wt.begin(), wt.end());
      m *= mult;
    }
    hw.charge = w.charge;
    out[hw] += m;
    if (++produced > cap) fail(errc::resource_limit, "h weight system exceeds cap");
    size_t k = 0;
    for (; k < per_factor.size(); ++k) {
      if (++idx[k] < per_factor[k].size()) break;
      idx[k] = 0;
    }
    if (k == per_factor.size()) break;
  }
  return out;
}

HIrrep h_unflatten(const HAlgebra& h, const HWeight& w) {
  HIrrep out;
  size_t pos = 0;
  for (const auto& f : h.factors) {
    out.labels.emplace_back(w.labels.begin() + pos, w.labels.begin() + pos + f.rank);
    pos += f.rank;
  }
  out.charge = w.charge;
  return out;
}

long h_height_num(const HAlgebra& h, const std::vector<int>& labels) {
  // sum over factors of (w_f, rho_f), put over a common denominator
  long den = 1;
  for (const auto& f : h.factors) den = std::lcm(den, root_system(f).form_denominator());
  long s = 0;
  size_t pos = 0;
  for (const auto& f : h.factors) {
    const auto& rs = root_system(f);
    Weight wf(labels.begin() + pos, labels.begin() + pos + f.rank);
    s += rs.inner_num(wf, rs.weyl_vector()) * (den / rs.form_denominator());
    pos += f.rank;
  }
  return s;
}

HWeight Projection::apply(const Weight& g_weight) const {
  HWeight out;
  for (const auto& block : blocks) {
    for (const auto& row : block) {
      Rat v(0);
      for (size_t k = 0; k < row.size(); ++k)
        if (g_weight[k] != 0) v += row[k] * Rat(g_weight[k]);
      v.canonicalize();
      if (v.get_den() != 1)
        fail(errc::non_dominant_projection, "projection produced non-integral Dynkin label");
      out.labels.push_back(static_cast<int>(rat_to_int64(v)));
    }
  }
  if (charge_row) {
    Rat v(0);
    for (size_t k = 0; k < charge_row->size(); ++k)
      if (g_weight[k] != 0) v += (*charge_row)[k] * Rat(g_weight[k]);
    out.charge = v;
  }
  return out;
}

Projection Projection::scaled_charge(const Rat& t) const {
  Projection p(*this);
  if (p.charge_row)
    for (auto& c : *p.charge_row) c *= t;
  return p;
}

}  // namespace ykm
