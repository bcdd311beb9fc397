#pragma once

#include "ykm/halgebra.hpp"

namespace ykm {

// Decompose a multiset of projected weights into h-irreps by peeling full
// h-characters from the dominance-maximal residual weight.
HIrrepSum peel_h_irreps(const HAlgebra& h, HWeightMultiset residual,
                        std::size_t cap = kDefaultWeightCap);

// Project the full weight system of the g-irrep hw and decompose.
HIrrepSum restrict_weight(const RootSystem& g, const HAlgebra& h, const Projection& proj,
                          const Weight& hw, std::size_t cap = kDefaultWeightCap);

}  // namespace ykm
