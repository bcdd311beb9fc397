#include "doctest.h"
#include "ykm/yangrep.hpp"

using namespace ykm;

namespace {

Int rep_dim(const YRep& r) {
  const auto& rs = root_system(r.g);
  Int d(0);
  for (const auto& p : r.parts) d += rs.dimension(p);
  return d;
}

}  // namespace

TEST_CASE("fundamental tables") {
  SUBCASE("su(N) and sp(2n) fundamentals are irreducible") {
    for (int i = 1; i <= 5; ++i) {
      YRep r = fundamental_yrep(parse_type("a5"), i);
      CHECK(r.parts == std::vector<Weight>{fund_weight(i, 5)});
    }
    CHECK(fundamental_yrep(parse_type("c3"), 2).parts.size() == 1);
  }
  SUBCASE("so(N) tensor fundamentals descend in steps of two") {
    YRep r = fundamental_yrep(parse_type("so11"), 3);
    CHECK(r.parts == std::vector<Weight>{fund_weight(3, 5), fund_weight(1, 5)});
    YRep r4 = fundamental_yrep(parse_type("so12"), 4);
    CHECK(r4.parts == std::vector<Weight>{fund_weight(4, 6), fund_weight(2, 6), Weight(6, 0)});
    // spinors stay irreducible
    CHECK(fundamental_yrep(parse_type("so11"), 5).parts.size() == 1);
    CHECK(fundamental_yrep(parse_type("so12"), 6).parts.size() == 1);
  }
  SUBCASE("e7: v_2 = V_2 + V_7") {
    YRep r = fundamental_yrep(parse_type("e7"), 2);
    CHECK(r.parts == std::vector<Weight>{fund_weight(2, 7), fund_weight(7, 7)});
  }
  SUBCASE("adjoint + trivial") {
    CHECK(adjoint_plus_trivial(parse_type("f4")).parts ==
          std::vector<Weight>{fund_weight(1, 4), Weight(4, 0)});
    CHECK(adjoint_plus_trivial(parse_type("g2")).parts ==
          std::vector<Weight>{fund_weight(2, 2), Weight(2, 0)});
    CHECK(adjoint_plus_trivial(parse_type("e8")).parts ==
          std::vector<Weight>{fund_weight(8, 8), Weight(8, 0)});
  }
  SUBCASE("derived entries carry the right total dimensions") {
    CHECK(rep_dim(fundamental_yrep(parse_type("e6"), 3)) == 351 + 27);
    CHECK(rep_dim(fundamental_yrep(parse_type("e8"), 1)) == 3875 + 248 + 1);
    CHECK(fundamental_yrep(parse_type("e6"), 3).provenance == Provenance::Derived);
  }
  SUBCASE("untabulated fundamentals throw") {
    CHECK_THROWS_AS(fundamental_yrep(parse_type("e8"), 3), error);
    CHECK_THROWS_AS(fundamental_yrep(parse_type("e6"), 4), error);
    CHECK_THROWS_AS(fundamental_yrep(parse_type("e7"), 5), error);
    CHECK_THROWS_AS(fundamental_yrep(parse_type("a3"), 7), error);
  }
}

TEST_CASE("bulk tensor product graph of the so(N) vector") {
  for (int N : {7, 10}) {
    const auto t = parse_type("so" + std::to_string(N));
    TPGraph g = bulk_tpg(t, 1, 1);
    REQUIRE(g.nodes.size() == 3);
    REQUIRE(g.edges.size() == 2);
    // chain (2 l1) -> (l2) -> (0) with labels 4 and 2N-4
    CHECK(g.node_casimirs[0] == 2 * N);
    CHECK(g.edges[0].delta == 4);
    CHECK(g.edges[1].delta == 2 * N - 4);
    for (const auto& e : g.edges) CHECK(e.delta > 0);
    // the first reducibility point in theta: delta/c_A = 4/(2N-4) = 2/(N-2),
    // against the bulk example's printed 2/N; the second is exactly 1
    CHECK(g.edges[1].delta / g.c_adjoint == 1);

    auto sub4 = tpg_subgraphs(g, Rat(4));
    REQUIRE(sub4.size() == 2);
    CHECK(sub4[0] == std::vector<int>{0});
    CHECK(sub4[1] == std::vector<int>{1, 2});
    auto sub_big = tpg_subgraphs(g, Rat(2 * N - 4));
    REQUIRE(sub_big.size() == 2);
    CHECK(sub_big[0] == std::vector<int>{0, 1});
    CHECK(sub_big[1] == std::vector<int>{2});
    CHECK_THROWS_AS(tpg_subgraphs(g, Rat(5)), error);
  }
}

TEST_CASE("bulk TPG edge cases") {
  SUBCASE("su(2) doublet squared is a single edge") {
    TPGraph g = bulk_tpg(parse_type("a1"), 1, 1);
    CHECK(g.nodes.size() == 2);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].delta == 4);
  }
  SUBCASE("reducible fundamentals are rejected") {
    CHECK_THROWS_AS(bulk_tpg(parse_type("so10"), 2, 2), error);
  }
  SUBCASE("mixed products work") {
    TPGraph g = bulk_tpg(parse_type("so9"), 1, 4);  // vector x spinor
    Int total(0);
    const auto& rs = root_system(parse_type("so9"));
    for (const auto& w : g.nodes) total += rs.dimension(w);
    CHECK(total == 9 * 16);
  }
}
