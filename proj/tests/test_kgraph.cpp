#include <thread>
#include <set>
#include "doctest.h"
#include "ykm/fixtures.hpp"
#include "ykm/render.hpp"

using namespace ykm;

namespace {

std::vector<std::pair<std::string, int>> fixture_graphs() {
  return {
      {"f4/b4", 4},       {"f4/b4", 1},       {"e6/f4", 1},      {"e6/f4", 2},
      {"e6/c4", 2},       {"e6/c4", 3},       {"e6/d5xu1", 1},   {"e6/d5xu1", 2},
      {"e6/a5xa1", 1},    {"e6/a5xa1", 2},    {"e7/e6xu1", 1},   {"e7/d6xa1", 7},
      {"e7/d6xa1", 1},    {"e7/a7", 1},       {"e7/a7", 2},      {"e8/e7xa1", 8},
      {"e8/d8", 8},       {"e8/d8", 1},       {"f4/c3xa1", 4},   {"f4/c3xa1", 1},
      {"g2/a1xa1", 1},    {"g2/a1xa1", 2},    {"so10/so3xso7", 2}, {"so10/so3xso7", 3},
      {"so12/su6xu1", 2}, {"sp10/su5xu1", 2}, {"su8/su3xsu5xu1", 3},
  };
}

}  // namespace

TEST_CASE("spectral decomposition through the bracket") {
  SymmetricPair p = pair_from_string("f4/b4");
  BranchingGraph g = branching_graph(p, yrep(p.g, 4));
  SpectralK sk = spectral_k(g);
  // default reference: the class of greatest composite Casimir, here (l4)
  CHECK(g.nodes[sk.reference].members[0].irrep.labels[0] == Weight{0, 0, 0, 1});
  CHECK(sk.tau[sk.reference].empty());
  // tau on the other nodes is a single bracket with Delta = 1 resp. 9
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    if (static_cast<int>(i) == sk.reference) continue;
    REQUIRE(sk.tau[i].size() == 1);
    CHECK(sk.tau[i].begin()->second == 1);
  }
  std::set<Rat> deltas;
  for (size_t i = 0; i < g.nodes.size(); ++i)
    for (const auto& [d, e] : sk.tau[i]) deltas.insert(d);
  CHECK(deltas == std::set<Rat>{Rat(1), Rat(9)});

  // overriding the reference moves the base point
  SpectralK sk2 = spectral_k(g, 2);
  CHECK(sk2.tau[2].empty());
}

TEST_CASE("bracket values") {
  CHECK(bracket_value(Rat(5), Rat(18), Rat(0)) == 1);
  CHECK(bracket_value(Rat(5), Rat(18), Rat(-5, 18)) == 0);
  CHECK(bracket_value(Rat(0), Rat(18), Rat(1, 3)) == -1);
  CHECK_THROWS_AS(bracket_value(Rat(9), Rat(18), Rat(1, 2)), error);
}

TEST_CASE("path independence on every fixture graph") {
  for (const auto& [s, v] : fixture_graphs()) {
    CAPTURE(s);
    CAPTURE(v);
    SymmetricPair p = pair_from_string(s);
    BranchingGraph g = branching_graph(p, yrep(p.g, v));
    CHECK_NOTHROW(spectral_k(g));
  }
}

TEST_CASE("label well-definedness across all edge witnesses") {
  for (const auto& [s, v] : fixture_graphs()) {
    SymmetricPair p = pair_from_string(s);
    BranchingGraph g = branching_graph(p, yrep(p.g, v));
    for (const auto& e : g.edges) {
      REQUIRE(!e.witnesses.empty());
      for (const auto& [a, b] : e.witnesses) {
        Rat d = g.nodes[e.src].members[a].casimir - g.nodes[e.dst].members[b].casimir;
        CHECK(d == e.delta);
      }
    }
  }
}

TEST_CASE("dimension audit") {
  for (const auto& [s, v] : fixture_graphs()) {
    CAPTURE(s);
    CAPTURE(v);
    SymmetricPair p = pair_from_string(s);
    YRep rep = yrep(p.g, v);
    BranchingGraph g = branching_graph(p, rep);
    const auto& rs = root_system(p.g);
    Int want(0);
    for (const auto& part : rep.parts) want += rs.dimension(part);
    Int got(0);
    for (const auto& node : g.nodes)
      for (const auto& m : node.members) got += m.dim;
    CHECK(got == want);
  }
}

TEST_CASE("merge classes") {
  for (const auto& [s, v] : fixture_graphs()) {
    SymmetricPair p = pair_from_string(s);
    if (p.degenerate) continue;
    BranchingGraph g = branching_graph(p, yrep(p.g, v));
    for (const auto& node : g.nodes) {
      std::set<int> parents;
      for (const auto& m : node.members) parents.insert(m.parent);
      CHECK((node.members.size() == 1 || parents.size() >= 2));
      // without a u(1), distinct members of a class descend from distinct
      // parents; with one, the two charge-conjugate pieces of a single part
      // may merge through the trivial member of another
      if (!p.h.has_u1) CHECK(parents.size() == node.members.size());
    }
  }
}

TEST_CASE("truncations") {
  SUBCASE("BDI v2: both single-end components are obtainable") {
    SymmetricPair p = pair_from_string("so10/so3xso7");
    BranchingGraph g = branching_graph(p, yrep(p.g, 2));
    CHECK(truncation_obtainable(g, {{Weight{2}, Weight{0, 0, 0}}}));
    CHECK(truncation_obtainable(g, {{Weight{0}, Weight{0, 1, 0}}}));
  }
  SUBCASE("BDI v3: the (l3,0) and (0,l3) ends are obtainable") {
    SymmetricPair p = pair_from_string("so16/so7xso9");
    BranchingGraph g = branching_graph(p, yrep(p.g, 3));
    // Lambda^3 of so(7) is e1+e2+e3 = twice the b3 spin weight
    CHECK(truncation_obtainable(g, {{Weight{0, 0, 2}, Weight(4, 0)}}));
    CHECK(truncation_obtainable(g, {{Weight(3, 0), Weight{0, 0, 1, 0}}}));
  }
  SUBCASE("e8/e7xa1: w_1 = (l1, 0)") {
    SymmetricPair p = pair_from_string("e8/e7xa1");
    BranchingGraph g = branching_graph(p, yrep(p.g, 8));
    CHECK(truncation_obtainable(g, {{fund_weight(1, 7), Weight{0}}}));
  }
  SUBCASE("single-node graphs have an empty report") {
    SymmetricPair p = pair_from_string("e6/c4");
    BranchingGraph g = branching_graph(p, yrep(p.g, 1));
    CHECK(truncations(g).empty());
  }
  SUBCASE("survivor sets are unions of deletion components") {
    for (const auto& [s, v] : fixture_graphs()) {
      SymmetricPair p = pair_from_string(s);
      BranchingGraph g = branching_graph(p, yrep(p.g, v));
      for (const auto& t : truncations(g)) {
        std::map<int, int> comp_of;
        for (size_t c = 0; c < t.components.size(); ++c)
          for (int n : t.components[c]) comp_of[n] = static_cast<int>(c);
        for (const auto& survivors : {t.survivors_zero, t.survivors_pole}) {
          std::set<int> comps;
          for (int n : survivors) comps.insert(comp_of.at(n));
          size_t expected = 0;
          for (int c : comps) expected += t.components[c].size();
          CHECK(expected == survivors.size());
        }
      }
    }
  }
}

TEST_CASE("charge rescaling leaves labels fixed") {
  for (const auto& s : {"e6/d5xu1", "e7/e6xu1", "so12/su6xu1", "sp8/su4xu1"}) {
    SymmetricPair base = pair_from_string(s);
    BranchingGraph g0 = branching_graph(base, yrep(base.g, s == std::string("e7/e6xu1") ? 1 : 2));
    for (int t : {2, 3}) {
      SymmetricPair scaled = pair_from_string(s, Rat(t));
      BranchingGraph g1 =
          branching_graph(scaled, yrep(scaled.g, s == std::string("e7/e6xu1") ? 1 : 2));
      REQUIRE(g0.edges.size() == g1.edges.size());
      for (size_t i = 0; i < g0.edges.size(); ++i) CHECK(g0.edges[i].delta == g1.edges[i].delta);
    }
  }
}

TEST_CASE("g plus trivial") {
  SUBCASE("two-node graphs for simple h with label C(h) - C(K)") {
    for (const auto& s : {"e6/f4", "su6/sp6", "e8/d8"}) {
      SymmetricPair p = pair_from_string(s);
      GPlusCGraph gc = g_plus_c_graph(p);
      CHECK(!gc.factors_not_isomorphic);
      REQUIRE(gc.graph.nodes.size() == 2);
      REQUIRE(gc.graph.edges.size() == 1);
      Rat want = composite_casimir(p, h_factor_adjoint(p.h, 0)) -
                 composite_casimir(p, p.k_rep[0]);
      Rat d = gc.graph.edges[0].delta;
      CHECK((d == want || d == -want));
    }
  }
  SUBCASE("BDI with unequal factors is flagged") {
    SymmetricPair p = pair_from_string("so9/so4xso5");
    CHECK(g_plus_c_graph(p).factors_not_isomorphic);
  }
  SUBCASE("all-isomorphic factors are not flagged") {
    SymmetricPair p = pair_from_string("so8/so4xso4");
    CHECK(!g_plus_c_graph(p).factors_not_isomorphic);
  }
}

TEST_CASE("magic square comparator") {
  MagicCell r4m8 = magic_square(4, Rat(8));
  CHECK(r4m8.pair_string == "e8/e7xa1");
  CHECK(r4m8.labels[0].computed == 6);
  CHECK(r4m8.labels[1].computed == 26);
  CHECK(r4m8.labels[0].relation == "exact");
  CHECK(r4m8.k_dim_exact);

  MagicCell r3m8 = magic_square(3, Rat(8));
  CHECK(r3m8.labels[0].computed == 6);
  CHECK(r3m8.labels[1].computed == 18);

  MagicCell r2m8 = magic_square(2, Rat(8));
  CHECK(r2m8.labels[0].computed == 6);
  CHECK(r2m8.labels[1].computed == 12);
  CHECK(r2m8.labels[0].formula == 12);
  CHECK(r2m8.labels[0].relation == "scale 1/2");

  MagicCell g2cell = magic_square(4, Rat(-2, 3));
  CHECK(g2cell.labels[1].relation == "exact");
  REQUIRE(g2cell.uv_label.has_value());
  CHECK(g2cell.uv_label->computed == Rat(-2, 3));

  CHECK_THROWS_AS(magic_square(2, Rat(2)), error);
}

TEST_CASE("disconnected graphs are returned with a warning") {
  SymmetricPair p = pair_from_string("f4/b4");
  BranchingGraph g = branching_graph(p, yrep(p.g, 4));
  g.edges.clear();  // isolate the three nodes
  SpectralK sk = spectral_k(g);
  CHECK(sk.disconnected);
  for (const auto& tau : sk.tau) CHECK(tau.empty());  // per-component references
}

TEST_CASE("concurrent callers observe identical results") {
  std::vector<std::string> outputs(4);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&outputs, t] {
      SymmetricPair p = pair_from_string("e6/d5xu1");
      BranchingGraph g = branching_graph(p, yrep(p.g, 2));
      outputs[t] = render_graph(g, Format::Json);
    });
  for (auto& w : workers) w.join();
  for (int t = 1; t < 4; ++t) CHECK(outputs[t] == outputs[0]);
}

TEST_CASE("rendering") {
  SymmetricPair p = pair_from_string("f4/b4");
  BranchingGraph g = branching_graph(p, yrep(p.g, 4));
  CHECK(render_graph(g, Format::Text) == "(λ1) <-1- (λ4) -9-> (0)\n");

  std::string dot = render_graph(g, Format::Dot);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("label=\"9\"") != std::string::npos);

  std::string doc = render_graph(g, Format::Json);
  CHECK(graph_json_roundtrip(doc) == doc);

  // byte-identical re-rendering
  BranchingGraph g2 = branching_graph(p, yrep(p.g, 4));
  CHECK(render_graph(g2, Format::Json) == doc);
}
