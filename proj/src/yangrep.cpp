#include "ykm/yangrep.hpp"

#include <algorithm>

namespace ykm {

namespace {

YRep make_rep(LieType g, int index, std::vector<Weight> parts, Provenance p) {
  YRep r;
  r.g = g;
  r.index = index;
  r.parts = std::move(parts);
  r.provenance = p;
  return r;
}

}  // namespace

YRep adjoint_plus_trivial(LieType g) {
  const auto& rs = root_system(g);
  return make_rep(g, 0, {rs.highest_root(), Weight(g.rank, 0)}, Provenance::Tabulated);
}

YRep fundamental_yrep(LieType g, int index) {
  int n = g.rank;
  if (index < 1 || index > n) fail(errc::unknown, "no fundamental with index " + std::to_string(index));
  switch (g.series) {
    case Series::A:
    case Series::C:
      // v_i = V_i throughout
      return make_rep(g, index, {fund_weight(index, n)}, Provenance::Tabulated);
    case Series::B:
    case Series::D: {
      bool spinor = (g.series == Series::B) ? (index == n) : (index >= n - 1);
      if (spinor) return make_rep(g, index, {fund_weight(index, n)}, Provenance::Tabulated);
      // v_i = V_i + V_{i-2} + ... + V_{1/0}
      std::vector<Weight> parts;
      for (int k = index; k >= 1; k -= 2) parts.push_back(fund_weight(k, n));
      if (index % 2 == 0) parts.push_back(Weight(n, 0));
      return make_rep(g, index, std::move(parts), Provenance::Tabulated);
    }
    case Series::E: {
      if (n == 6) {
        if (index == 1 || index == 6) return make_rep(g, index, {fund_weight(index, n)}, Provenance::Tabulated);
        if (index == 2) return make_rep(g, 2, {fund_weight(2, n), Weight(n, 0)}, Provenance::Tabulated);
        if (index == 3)
          return make_rep(g, 3, {fund_weight(3, n), fund_weight(6, n)}, Provenance::Derived);
        if (index == 5)
          return make_rep(g, 5, {fund_weight(5, n), fund_weight(1, n)}, Provenance::Derived);
        fail(errc::unknown, "e6: v_4 is not tabulated");
      }
      if (n == 7) {
        if (index == 7) return make_rep(g, 7, {fund_weight(7, n)}, Provenance::Tabulated);
        if (index == 1) return make_rep(g, 1, {fund_weight(1, n), Weight(n, 0)}, Provenance::Tabulated);
        if (index == 2)
          return make_rep(g, 2, {fund_weight(2, n), fund_weight(7, n)}, Provenance::Tabulated);
        fail(errc::unknown, "e7: only v_1, v_2, v_7 are tabulated");
      }
      if (index == 8) return make_rep(g, 8, {fund_weight(8, n), Weight(n, 0)}, Provenance::Tabulated);
      if (index == 1)
        return make_rep(g, 1, {fund_weight(1, n), fund_weight(8, n), Weight(n, 0)},
                        Provenance::Derived);
      fail(errc::unknown, "e8: only v_1 and v_8 are tabulated");
    }
    case Series::F: {
      if (index == 4) return make_rep(g, 4, {fund_weight(4, 4)}, Provenance::Tabulated);
      if (index == 1) return make_rep(g, 1, {fund_weight(1, 4), Weight(4, 0)}, Provenance::Tabulated);
      fail(errc::unknown, "f4: only v_1 and v_4 are tabulated");
    }
    case Series::G: {
      if (index == 1) return make_rep(g, 1, {fund_weight(1, 2)}, Provenance::Tabulated);
      return make_rep(g, 2, {fund_weight(2, 2), Weight(2, 0)}, Provenance::Tabulated);
    }
  }
  fail(errc::unknown, "no table for this type");
}

YRep yrep(LieType g, int index) {
  if (index == 0) return adjoint_plus_trivial(g);
  return fundamental_yrep(g, index);
}

TPGraph bulk_tpg(LieType g, int i, int j, std::size_t cap) {
  YRep vi = fundamental_yrep(g, i), vj = fundamental_yrep(g, j);
  if (vi.parts.size() != 1 || vj.parts.size() != 1)
    fail(errc::bad_params, "bulk TPG requires g-irreducible fundamentals");
  const auto& rs = root_system(g);
  TPGraph tpg;
  tpg.g = g;
  tpg.c_adjoint = rs.adjoint_casimir();
  auto sum = tensor_decompose(rs, vi.parts[0], vj.parts[0], cap);
  for (const auto& [w, m] : sum) {
    if (m > 1)
      fail(errc::multiplicity_failure,
           "bulk TPG: component (" + weight_str(w) + ") has multiplicity " + m.get_str());
    tpg.nodes.push_back(w);
    tpg.node_casimirs.push_back(rs.casimir(w));
  }
  // order nodes by descending Casimir, then lexicographically
  std::vector<size_t> order(tpg.nodes.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (tpg.node_casimirs[a] != tpg.node_casimirs[b])
      return tpg.node_casimirs[a] > tpg.node_casimirs[b];
    return tpg.nodes[a] < tpg.nodes[b];
  });
  std::vector<Weight> nodes;
  std::vector<Rat> cas;
  for (size_t k : order) {
    nodes.push_back(tpg.nodes[k]);
    cas.push_back(tpg.node_casimirs[k]);
  }
  tpg.nodes = std::move(nodes);
  tpg.node_casimirs = std::move(cas);

  const Weight adj = rs.highest_root();
  for (size_t a = 0; a < tpg.nodes.size(); ++a)
    for (size_t b = a + 1; b < tpg.nodes.size(); ++b) {
      // edge when one node sits inside adjoint (x) other
      Int m = tensor_multiplicity(rs, tpg.nodes[b], adj, tpg.nodes[a], cap);
      if (m == 0) continue;
      Rat delta = tpg.node_casimirs[a] - tpg.node_casimirs[b];
      if (delta >= 0)
        tpg.edges.push_back({static_cast<int>(a), static_cast<int>(b), delta});
      else
        tpg.edges.push_back({static_cast<int>(b), static_cast<int>(a), -delta});
    }
  return tpg;
}

std::vector<std::vector<int>> tpg_subgraphs(const TPGraph& tpg, const Rat& label) {
  bool found = false;
  for (const auto& e : tpg.edges) found = found || e.delta == label;
  if (!found) fail(errc::label_absent, "no TPG edge carries that label");
  int n = static_cast<int>(tpg.nodes.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : tpg.edges) {
    if (e.delta == label) continue;
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s}, members;
    comp[s] = static_cast<int>(comps.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int u : adj[v])
        if (comp[u] == -1) {
          comp[u] = comp[s];
          stack.push_back(u);
        }
    }
    std::sort(members.begin(), members.end());
    comps.push_back(members);
  }
  return comps;
}

}  // namespace ykm
