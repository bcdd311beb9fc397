#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ykm/lietype.hpp"
#include "ykm/rational.hpp"

namespace ykm {

// Dynkin labels in the fundamental-weight basis.
using Weight = std::vector<int>;

std::string weight_str(const Weight& w);                 // "1,0,2"
Weight parse_weight(const std::string& s, int rank);     // comma separated labels
Weight fund_weight(int i, int rank);                     // unit vector, 1-based node index

constexpr std::size_t kDefaultWeightCap = 1000000;

struct PosRoot {
  Weight dynkin;           // pairings with the simple coroots
  std::vector<int> srt;    // coordinates over the simple roots
  Rat len2;                // (alpha, alpha)
};

// Exact root-system data for one simple type, long roots normalized to
// squared length 2. Weights are handled throughout in Dynkin labels; the
// bilinear form on the fundamental-weight basis is stored as an exact
// rational matrix.
class RootSystem {
public:
  explicit RootSystem(LieType t);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<std::vector<Rat>>& bilinear_form() const { return form_; }
  const std::vector<Rat>& simple_d() const { return d_; }  // half squared lengths
  const std::vector<PosRoot>& positive_roots() const { return positive_; }
  Weight simple_root(int i) const {  // 1-based, in the fundamental-weight basis
    return Weight(cartan_[i - 1].begin(), cartan_[i - 1].end());
  }
  const Weight& highest_root() const { return highest_root_; }
  const Weight& weyl_vector() const { return rho_; }

  Rat inner(const Weight& a, const Weight& b) const;
  // integer fast path: returns (a,b) * form_denominator()
  long inner_num(const Weight& a, const Weight& b) const;
  long form_denominator() const { return form_den_; }
  bool is_dominant(const Weight& w) const;

  Int dimension(const Weight& hw) const;
  Rat casimir(const Weight& hw) const;
  Rat adjoint_casimir() const;

  // Dominant representative of w + rho, shifted back; sign is the determinant
  // of the reflecting Weyl element, 0 iff w + rho lies on a wall.
  std::pair<Weight, int> reflect_to_dominant(const Weight& w) const;
  // Plain dominant representative of the Weyl orbit of w.
  Weight dominant_of(const Weight& w) const;
  // Dominant representative of -hw's orbit (highest weight of the dual).
  Weight conjugate(const Weight& hw) const;

  std::map<Weight, Int> dominant_multiplicities(const Weight& hw,
                                                std::size_t cap = kDefaultWeightCap) const;
  std::map<Weight, Int> weight_multiplicities(const Weight& hw,
                                              std::size_t cap = kDefaultWeightCap) const;
  std::vector<Weight> weyl_orbit(const Weight& dominant, std::size_t cap = kDefaultWeightCap) const;

private:
  void build_cartan();
  void build_positive_roots();

  LieType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rat> d_;
  std::vector<std::vector<Rat>> form_;
  std::vector<std::vector<long>> form_num_;
  long form_den_ = 1;
  std::vector<PosRoot> positive_;
  Weight highest_root_;
  Weight rho_;
};

// Shared immutable registry; safe for concurrent use.
const RootSystem& root_system(LieType t);

// Full weight system with a process-wide synchronized cache.
const std::map<Weight, Int>& cached_weights(LieType t, const Weight& hw,
                                            std::size_t cap = kDefaultWeightCap);

}  // namespace ykm
