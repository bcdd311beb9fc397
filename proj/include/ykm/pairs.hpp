#pragma once

#include <string>
#include <vector>

#include "ykm/branching.hpp"

namespace ykm {

// A catalogued symmetric pair (g,h) with validated weight projection,
// the K representation carried by k, and the c_i coefficients.
struct SymmetricPair {
  std::string family;           // Cartan class: AI, AII, AIII, BDI, CI, CII, DIII, EI..EIX, FI, FII, G
  std::vector<int> params;      // dimension-style parameters, empty for fixed pairs
  std::string pair_string;      // canonical CLI form, e.g. "so10/so4xso6"
  LieType g;
  HAlgebra h;
  Projection proj;
  std::vector<HIrrep> k_rep;    // one entry, or two charge-conjugate entries when has_u1
  std::vector<Rat> c;           // per simple factor
  Rat c_u1 = 0;
  Rat c_adjoint;                // c_A of g
  Int dim_k = 0;
  bool degenerate = false;
  std::string note;
};

struct PairFamily {
  std::string name;
  std::string g_pattern;
  std::string h_pattern;
  std::string k_pattern;
  int nparams;  // 0, 1 (N) or 2 (N, M)
};

// Every catalogued family, 19 in all.
const std::vector<PairFamily>& catalogue();

SymmetricPair instantiate(const std::string& family, const std::vector<int>& params,
                          const Rat& charge_scale = 1, std::size_t cap = kDefaultWeightCap);

// "so10/so4xso6", "e6/f4", "su6/sp6", "so12/su6xu1", ...
SymmetricPair pair_from_string(const std::string& s, const Rat& charge_scale = 1,
                               std::size_t cap = kDefaultWeightCap);

Rat symmetric_space_sum(const SymmetricPair& p);
Rat composite_casimir(const SymmetricPair& p, const HIrrep& w);

HIrrepSum restrict_irrep(const SymmetricPair& p, const Weight& hw,
                         std::size_t cap = kDefaultWeightCap);
std::vector<std::pair<int, HIrrepSum>> restrict_parts(const SymmetricPair& p,
                                                      const std::vector<Weight>& parts,
                                                      std::size_t cap = kDefaultWeightCap);

// multiplicity of w inside K (x) v, summed over the k pieces
Int k_times_contains(const SymmetricPair& p, const HIrrep& w, const HIrrep& v,
                     std::size_t cap = kDefaultWeightCap);

// catalogue file round trip (versioned JSON, exact rationals)
std::string catalogue_to_json(const std::vector<SymmetricPair>& pairs);
std::vector<SymmetricPair> catalogue_from_json(const std::string& text,
                                               std::size_t cap = kDefaultWeightCap);

// default instances used for sweeps and the exported catalogue document
std::vector<SymmetricPair> default_instances(int max_n = 10, std::size_t cap = kDefaultWeightCap);

}  // namespace ykm
