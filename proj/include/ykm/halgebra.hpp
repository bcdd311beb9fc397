#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ykm/rootsystem.hpp"
#include "ykm/tensor.hpp"

namespace ykm {

// h = h_1 x ... x h_s (x u(1)); at most one u(1) factor.
struct HAlgebra {
  std::vector<LieType> factors;
  bool has_u1 = false;

  bool operator==(const HAlgebra& o) const { return factors == o.factors && has_u1 == o.has_u1; }
};

// Irreducible representation of h: per-factor Dynkin labels plus a rational
// u(1) charge (zero when h has no u(1)).
struct HIrrep {
  std::vector<Weight> labels;
  Rat charge = 0;

  bool operator==(const HIrrep& o) const { return labels == o.labels && charge == o.charge; }
  bool operator<(const HIrrep& o) const {
    if (labels != o.labels) return labels < o.labels;
    return charge < o.charge;
  }
};

using HIrrepSum = std::map<HIrrep, Int>;

// flattened weight of the semisimple part plus charge
struct HWeight {
  std::vector<int> labels;
  Rat charge = 0;

  bool operator==(const HWeight& o) const { return labels == o.labels && charge == o.charge; }
  bool operator<(const HWeight& o) const {
    if (labels != o.labels) return labels < o.labels;
    return charge < o.charge;
  }
};

using HWeightMultiset = std::map<HWeight, Int>;

HIrrep h_trivial(const HAlgebra& h);
bool h_is_dominant(const HAlgebra& h, const HIrrep& w);
Int h_dim(const HAlgebra& h, const HIrrep& w);
HIrrep h_conjugate(const HAlgebra& h, const HIrrep& w);
// adjoint of factor i as an HIrrep (trivial elsewhere, charge 0)
HIrrep h_factor_adjoint(const HAlgebra& h, size_t i);

// multiplicity of target in a (x) b; factor-wise with charge addition
Int h_contains(const HAlgebra& h, const HIrrep& target, const HIrrep& a, const HIrrep& b,
               std::size_t cap = kDefaultWeightCap);

// full weight multiset of the irrep, flattened
HWeightMultiset h_weight_system(const HAlgebra& h, const HIrrep& w,
                                std::size_t cap = kDefaultWeightCap);

HIrrep h_unflatten(const HAlgebra& h, const HWeight& w);

// strictly dominance-monotone integer height of the semisimple part
long h_height_num(const HAlgebra& h, const std::vector<int>& labels);

// Rational linear map from g Dynkin labels to concatenated h-factor Dynkin
// labels plus an optional charge row.
struct Projection {
  std::vector<std::vector<std::vector<Rat>>> blocks;  // per factor: rows x g_rank
  std::optional<std::vector<Rat>> charge_row;

  HWeight apply(const Weight& g_weight) const;
  Projection scaled_charge(const Rat& t) const;
};

}  // namespace ykm
