#include <random>

#include "doctest.h"
#include "ykm/pairs.hpp"

using namespace ykm;

namespace {

Int total_dim(const HAlgebra& h, const HIrrepSum& sum) {
  Int d(0);
  for (const auto& [w, m] : sum) d += m * h_dim(h, w);
  return d;
}

// multiset certificate: the projected weight system equals the union of the
// claimed h-characters
bool certified(const SymmetricPair& p, const Weight& hw, const HIrrepSum& sum) {
  const auto& ws = cached_weights(p.g, hw);
  HWeightMultiset projected;
  for (const auto& [w, m] : ws) projected[p.proj.apply(w)] += m;
  HWeightMultiset rebuilt;
  for (const auto& [w, m] : sum)
    for (const auto& [v, mv] : h_weight_system(p.h, w)) rebuilt[v] += m * mv;
  return projected == rebuilt;
}

}  // namespace

TEST_CASE("trivial restriction") {
  SymmetricPair p = instantiate("FII", {});
  auto sum = restrict_irrep(p, Weight(4, 0));
  REQUIRE(sum.size() == 1);
  CHECK(sum.begin()->first == h_trivial(p.h));
}

TEST_CASE("f4/b4: the 26 branches to vector + spinor + singlet") {
  SymmetricPair p = instantiate("FII", {});
  auto sum = restrict_irrep(p, Weight{0, 0, 0, 1});
  REQUIRE(sum.size() == 3);
  CHECK(sum.at(HIrrep{{Weight{1, 0, 0, 0}}, Rat(0)}) == 1);
  CHECK(sum.at(HIrrep{{Weight{0, 0, 0, 1}}, Rat(0)}) == 1);
  CHECK(sum.at(h_trivial(p.h)) == 1);
}

TEST_CASE("e8/e7xa1: the adjoint branches as 248 = (133,1)+(56,2)+(1,3)") {
  SymmetricPair p = instantiate("EIX", {});
  auto sum = restrict_irrep(p, root_system(p.g).highest_root());
  REQUIRE(sum.size() == 3);
  CHECK(sum.at(HIrrep{{fund_weight(1, 7), Weight{0}}, Rat(0)}) == 1);
  CHECK(sum.at(HIrrep{{fund_weight(7, 7), Weight{1}}, Rat(0)}) == 1);
  CHECK(sum.at(HIrrep{{Weight(7, 0), Weight{2}}, Rat(0)}) == 1);
  CHECK(total_dim(p.h, sum) == 248);
}

TEST_CASE("restrict_sum keeps parent tags") {
  SymmetricPair p = instantiate("BDI", {10, 3});
  auto parts = restrict_parts(p, {fund_weight(2, 5), Weight(5, 0)});
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == 0);
  CHECK(parts[0].second.size() == 3);
  CHECK(parts[1].second.size() == 1);
  CHECK(total_dim(p.h, parts[0].second) == 45);
  CHECK(restrict_parts(p, {}).empty());
}

TEST_CASE("dimension conservation and weight-by-weight certification") {
  std::vector<std::pair<std::string, std::vector<Weight>>> cases = {
      {"su5/so5", {}}, {"su6/sp6", {}}, {"so9/so4xso5", {}}, {"sp6/su3xu1", {}}, {"e6/f4", {}},
  };
  std::mt19937 rng(7);
  for (auto& [s, hws] : cases) {
    SymmetricPair p = pair_from_string(s);
    const auto& rs = root_system(p.g);
    int n = rs.rank();
    // every irrep of dim <= 200 given by small labels, plus a couple random
    std::vector<Weight> samples;
    for (int i = 1; i <= n; ++i) samples.push_back(fund_weight(i, n));
    samples.push_back(rs.highest_root());
    for (int t = 0; t < 3; ++t) {
      Weight w(n, 0);
      for (int i = 0; i < n; ++i) w[i] = static_cast<int>(rng() % 2);
      samples.push_back(w);
    }
    for (const auto& hw : samples) {
      if (rs.dimension(hw) > 200) continue;
      CAPTURE(s);
      CAPTURE(weight_str(hw));
      auto sum = restrict_irrep(p, hw);
      CHECK(total_dim(p.h, sum) == rs.dimension(hw));
      CHECK(certified(p, hw, sum));
    }
  }
}

TEST_CASE("charge conjugation symmetry for self-conjugate representations") {
  for (const auto& s : {"e7/e6xu1", "so12/su6xu1", "su6/su3xsu3xu1"}) {
    CAPTURE(s);
    SymmetricPair p = pair_from_string(s);
    const auto& rs = root_system(p.g);
    auto sum = restrict_irrep(p, rs.highest_root());  // adjoints are self-conjugate
    for (const auto& [w, m] : sum) {
      HIrrep v = h_conjugate(p.h, w);
      REQUIRE(sum.count(v));
      CHECK(sum.at(v) == m);
    }
  }
}

TEST_CASE("a bad projection fails loudly") {
  SymmetricPair p = instantiate("FII", {});
  Projection bad = p.proj;
  std::swap(bad.blocks[0][0], bad.blocks[0][2]);  // scramble two rows
  const auto& rs = root_system(p.g);
  CHECK_THROWS_AS(restrict_weight(rs, p.h, bad, rs.highest_root()), error);
}
