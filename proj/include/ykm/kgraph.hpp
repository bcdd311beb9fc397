#pragma once

#include <optional>

#include "ykm/pairs.hpp"
#include "ykm/yangrep.hpp"

namespace ykm {

struct GraphMember {
  HIrrep irrep;
  int parent;   // index into the v-rep parts
  Rat casimir;  // composite Casimir through the pair's c_i
  Int dim;
};

// Branching graph of a Y(g,h)-representation: nodes are merge classes of
// h-irreps, edges carry exact rational labels Delta = C(W) - C(W').
struct BranchingGraph {
  SymmetricPair pair;
  YRep vrep;

  struct Node {
    std::vector<GraphMember> members;
  };
  struct Edge {
    int src, dst;   // oriented from higher to lower Casimir; lexicographic for Delta = 0
    Rat delta;      // >= 0 as stored
    std::vector<std::pair<int, int>> witnesses;  // (member in src, member in dst)
  };
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  Rat c_adjoint;
  int top_node = 0;  // class of the parent-0 component with greatest Casimir
};

BranchingGraph branching_graph(const SymmetricPair& pair, const YRep& v,
                               std::size_t cap = kDefaultWeightCap);

struct GPlusCGraph {
  BranchingGraph graph;
  bool factors_not_isomorphic = false;
};

// graph of the adjoint (+) trivial representation; flagged when the simple
// factors of h are not pairwise isomorphic
GPlusCGraph g_plus_c_graph(const SymmetricPair& pair, std::size_t cap = kDefaultWeightCap);

// formal product of bracket factors [Delta]^{+-1} per node
struct SpectralK {
  int reference = 0;
  std::vector<std::map<Rat, int>> tau;  // per node: Delta -> exponent
  Rat c_adjoint;
  bool disconnected = false;
};

SpectralK spectral_k(const BranchingGraph& g, std::optional<int> reference = {});

// [A] at theta = x * (i pi), exact; throws Pole at x = A/c_A
Rat bracket_value(const Rat& delta, const Rat& c_adjoint, const Rat& x);

struct TruncationEntry {
  Rat delta;
  Rat theta_zero;  // -delta/c_A in units of (i pi)
  Rat theta_pole;  // +delta/c_A
  std::vector<std::vector<int>> components;  // node sets after deleting delta-edges
  std::vector<bool> contains_top;
  std::vector<int> survivors_zero;  // nodes of extremal bracket order at theta_zero
  std::vector<int> survivors_pole;
};

std::vector<TruncationEntry> truncations(const BranchingGraph& g);

// ----------------------------------------------------------------- magic square

struct MagicLabel {
  Rat computed;
  Rat formula;
  std::string relation;  // "exact", "flip", "scale p/q", "mismatch"
};

struct MagicCell {
  int row;
  Rat m;
  std::string pair_string;
  std::vector<MagicLabel> labels;
  Int k_dim;
  Int k_dim_formula;
  bool k_dim_exact = false;
  std::optional<MagicLabel> uv_label;  // the (U,0) -> (V,1) graph where computable
};

// row in {2,3,4}; m in {1,2,4,8}, plus 0 and -2/3 for row 4
MagicCell magic_square(int row, const Rat& m, std::size_t cap = kDefaultWeightCap);
std::vector<std::pair<int, Rat>> magic_cells();

}  // namespace ykm
