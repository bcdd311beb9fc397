#pragma once

#include <map>

#include "ykm/rootsystem.hpp"

namespace ykm {

using IrrepSum = std::map<Weight, Int>;

// Exact decomposition of the tensor product of two irreducibles,
// uniform over all simple types (Brauer-Klimyk with wall annihilation).
IrrepSum tensor_decompose(const RootSystem& rs, const Weight& lam, const Weight& mu,
                          std::size_t cap = kDefaultWeightCap);

// Multiplicity of target in lam (x) mu.
Int tensor_multiplicity(const RootSystem& rs, const Weight& target, const Weight& lam,
                        const Weight& mu, std::size_t cap = kDefaultWeightCap);

}  // namespace ykm
