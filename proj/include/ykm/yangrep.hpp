#pragma once

#include "ykm/tensor.hpp"

namespace ykm {

enum class Provenance { Tabulated, Derived };

// A fundamental Yangian representation as an ordered list of g-irreducible
// parts; index 0 is the distinguished adjoint (+) trivial representation.
struct YRep {
  LieType g;
  int index = 0;
  std::vector<Weight> parts;  // first part carries the greatest highest weight
  Provenance provenance = Provenance::Tabulated;
};

// table entry for the i-th fundamental; throws Unknown where no
// decomposition is tabulated
YRep fundamental_yrep(LieType g, int index);
YRep adjoint_plus_trivial(LieType g);
// index 0 resolves to adjoint_plus_trivial
YRep yrep(LieType g, int index);

struct TPGraph {
  LieType g;
  std::vector<Weight> nodes;
  std::vector<Rat> node_casimirs;
  struct Edge {
    int src, dst;
    Rat delta;
  };
  std::vector<Edge> edges;
  Rat c_adjoint;
};

// bulk tensor product graph on the components of V_i (x) V_j
TPGraph bulk_tpg(LieType g, int i, int j, std::size_t cap = kDefaultWeightCap);

// connected components after deleting all edges with the given label
std::vector<std::vector<int>> tpg_subgraphs(const TPGraph& tpg, const Rat& label);

}  // namespace ykm
