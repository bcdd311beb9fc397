#include "ykm/kgraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "ykm/render.hpp"

namespace ykm {

namespace {

bool is_trivial_part(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](int c) { return c == 0; });
}

struct DisjointSet {
  std::vector<int> up;
  explicit DisjointSet(size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

BranchingGraph branching_graph(const SymmetricPair& pair, const YRep& v, std::size_t cap) {
  if (v.g != pair.g) fail(errc::bad_params, "v-rep and pair disagree on g");
  BranchingGraph g;
  g.pair = pair;
  g.vrep = v;
  g.c_adjoint = pair.c_adjoint;

  // members, tagged by parent part
  std::vector<GraphMember> members;
  std::map<HIrrep, std::vector<int>> occurrences;
  for (size_t part = 0; part < v.parts.size(); ++part) {
    HIrrepSum dec = restrict_irrep(pair, v.parts[part], cap);
    for (const auto& [w, m] : dec) {
      if (m > 1)
        fail(errc::multiplicity_failure,
             "component " + render_hirrep(pair.h, w) + " appears with multiplicity " +
                 m.get_str() + " inside one g-irreducible part");
      occurrences[w].push_back(static_cast<int>(part));
      GraphMember gm;
      gm.irrep = w;
      gm.parent = static_cast<int>(part);
      gm.casimir = composite_casimir(pair, w);
      gm.dim = h_dim(pair.h, w);
      members.push_back(std::move(gm));
    }
  }
  // the same h-irrep held by two distinct nontrivial g-parts leaves the
  // reduced matrix elements underdetermined
  for (const auto& [w, parents] : occurrences) {
    int nontrivial = 0;
    for (int p : parents)
      if (!is_trivial_part(v.parts[p])) ++nontrivial;
    if (nontrivial > 1)
      fail(errc::multiplicity_failure,
           "component " + render_hirrep(pair.h, w) +
               " appears in more than one nontrivial g-irreducible part");
  }

  std::sort(members.begin(), members.end(), [](const GraphMember& a, const GraphMember& b) {
    if (a.parent != b.parent) return a.parent < b.parent;
    if (a.casimir != b.casimir) return a.casimir > b.casimir;
    if (a.irrep.charge != b.irrep.charge) return a.irrep.charge > b.irrep.charge;
    return a.irrep.labels < b.irrep.labels;
  });

  size_t n = members.size();
  std::vector<std::vector<bool>> linked(n, std::vector<bool>(n, false));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      linked[a][b] = k_times_contains(pair, members[a].irrep, members[b].irrep, cap) > 0;
    }

  // merge classes: W ~ W' iff W < K (x) W' with distinct parents
  DisjointSet ds(n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      if (members[a].parent == members[b].parent) continue;
      if (linked[a][b] || linked[b][a]) ds.unite(static_cast<int>(a), static_cast<int>(b));
    }

  std::map<int, std::vector<int>> classes;
  for (size_t i = 0; i < n; ++i)
    classes[ds.find(static_cast<int>(i))].push_back(static_cast<int>(i));

  // canonical node order: descending maximal Casimir, then member order
  std::vector<std::vector<int>> node_members;
  for (const auto& [root, list] : classes) node_members.push_back(list);
  auto max_cas = [&](const std::vector<int>& list) {
    Rat c = members[list[0]].casimir;
    for (int i : list) c = std::max(c, members[i].casimir);
    return c;
  };
  std::sort(node_members.begin(), node_members.end(),
            [&](const std::vector<int>& x, const std::vector<int>& y) {
              Rat cx = max_cas(x), cy = max_cas(y);
              if (cx != cy) return cx > cy;
              return x < y;
            });

  std::vector<int> node_of(n);
  for (size_t ni = 0; ni < node_members.size(); ++ni) {
    BranchingGraph::Node node;
    for (int mi : node_members[ni]) {
      node_of[mi] = static_cast<int>(ni);
      node.members.push_back(members[mi]);
    }
    g.nodes.push_back(std::move(node));
  }

  // edges from same-parent containment pairs across classes; all witness
  // labels for one class pair must agree exactly
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> witness;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      if (members[a].parent != members[b].parent) continue;
      if (!(linked[a][b] || linked[b][a])) continue;
      int na = node_of[a], nb = node_of[b];
      if (na == nb) {
        if (members[a].casimir != members[b].casimir)
          fail(errc::inconsistent_labels,
               "members " + render_hirrep(pair.h, members[a].irrep) + " and " +
                   render_hirrep(pair.h, members[b].irrep) +
                   " share a class but differ in Casimir");
        continue;
      }
      auto key = std::minmax(na, nb);
      witness[{key.first, key.second}].emplace_back(static_cast<int>(a), static_cast<int>(b));
    }

  for (const auto& [np, pairs_ab] : witness) {
    std::optional<Rat> delta;
    for (const auto& [a, b] : pairs_ab) {
      int ma = a, mb = b;
      if (node_of[ma] != np.first) std::swap(ma, mb);
      Rat d = members[ma].casimir - members[mb].casimir;
      if (!delta)
        delta = d;
      else if (*delta != d)
        fail(errc::inconsistent_labels,
             "edge between classes " + std::to_string(np.first) + " and " +
                 std::to_string(np.second) + " has witnesses with labels " + delta->get_str() +
                 " and " + d.get_str());
    }
    BranchingGraph::Edge e;
    bool forward = *delta > 0 || (*delta == 0 && np.first < np.second);
    e.src = forward ? np.first : np.second;
    e.dst = forward ? np.second : np.first;
    e.delta = *delta >= 0 ? *delta : Rat(-*delta);
    for (const auto& [a, b] : pairs_ab) {
      int ma = a, mb = b;
      if (node_of[ma] != e.src) std::swap(ma, mb);
      int pa = 0, pb = 0;
      for (int i = 0; i < ma; ++i)
        if (node_of[i] == e.src) ++pa;
      for (int i = 0; i < mb; ++i)
        if (node_of[i] == e.dst) ++pb;
      e.witnesses.emplace_back(pa, pb);
    }
    g.edges.push_back(std::move(e));
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& x, const auto& y) {
    if (x.src != y.src) return x.src < y.src;
    return x.dst < y.dst;
  });

  int top_member = -1;
  for (size_t i = 0; i < n; ++i) {
    if (members[i].parent != 0) continue;
    if (top_member < 0 || members[i].casimir > members[top_member].casimir)
      top_member = static_cast<int>(i);
  }
  g.top_node = top_member >= 0 ? node_of[top_member] : 0;
  return g;
}

GPlusCGraph g_plus_c_graph(const SymmetricPair& pair, std::size_t cap) {
  GPlusCGraph out{branching_graph(pair, adjoint_plus_trivial(pair.g), cap), false};
  const auto& fs = pair.h.factors;
  bool iso = !pair.h.has_u1;
  for (size_t i = 1; i < fs.size(); ++i) iso = iso && fs[i] == fs[0];
  out.factors_not_isomorphic = !iso;
  return out;
}

SpectralK spectral_k(const BranchingGraph& g, std::optional<int> reference) {
  SpectralK sk;
  sk.c_adjoint = g.c_adjoint;
  size_t n = g.nodes.size();
  sk.tau.assign(n, {});

  auto node_max_cas = [&](int i) {
    Rat c = g.nodes[i].members[0].casimir;
    for (const auto& m : g.nodes[i].members) c = std::max(c, m.casimir);
    return c;
  };
  if (reference) {
    if (*reference < 0 || static_cast<size_t>(*reference) >= n)
      fail(errc::bad_params, "reference node out of range");
    sk.reference = *reference;
  } else {
    int best = 0;
    for (size_t i = 1; i < n; ++i)
      if (node_max_cas(static_cast<int>(i)) > node_max_cas(best)) best = static_cast<int>(i);
    sk.reference = best;
  }

  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    adj[g.edges[e].src].emplace_back(g.edges[e].dst, static_cast<int>(e));
    adj[g.edges[e].dst].emplace_back(g.edges[e].src, static_cast<int>(e));
  }

  std::vector<int> state(n, 0);
  auto assign_component = [&](int start) {
    state[start] = 1;
    std::deque<int> q{start};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (auto [u, ei] : adj[v]) {
        if (state[u]) continue;
        const auto& e = g.edges[ei];
        sk.tau[u] = sk.tau[v];
        int exp = (e.src == v) ? 1 : -1;  // tau_dst = tau_src * [delta]
        int& cur = sk.tau[u][e.delta];
        cur += exp;
        if (e.delta == 0) cur = ((cur % 2) + 2) % 2;  // [0] = -1, a bare sign
        if (cur == 0) sk.tau[u].erase(e.delta);
        state[u] = 1;
        q.push_back(u);
      }
    }
  };
  assign_component(sk.reference);
  for (size_t i = 0; i < n; ++i)
    if (!state[i]) {
      sk.disconnected = true;
      assign_component(static_cast<int>(i));
    }

  for (const auto& e : g.edges) {
    std::map<Rat, int> want = sk.tau[e.src];
    int& cur = want[e.delta];
    cur += 1;
    if (e.delta == 0) cur = ((cur % 2) + 2) % 2;
    if (cur == 0) want.erase(e.delta);
    if (want != sk.tau[e.dst])
      fail(errc::path_inconsistent, "bracket products are path dependent across an edge");
  }
  return sk;
}

Rat bracket_value(const Rat& delta, const Rat& c_adjoint, const Rat& x) {
  Rat a = delta / c_adjoint;
  if (x == a)
    fail(errc::pole,
         "bracket [" + delta.get_str() + "] has a pole at theta = " + x.get_str() + " i pi");
  return (a + x) / (a - x);
}

std::vector<TruncationEntry> truncations(const BranchingGraph& g) {
  SpectralK sk = spectral_k(g);
  size_t n = g.nodes.size();

  std::set<Rat> labels;
  for (const auto& e : g.edges) labels.insert(e.delta);

  std::vector<TruncationEntry> out;
  for (const Rat& d : labels) {
    TruncationEntry t;
    t.delta = d;
    t.theta_zero = -d / g.c_adjoint;
    t.theta_pole = d / g.c_adjoint;

    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges) {
      if (e.delta == d) continue;
      adj[e.src].push_back(e.dst);
      adj[e.dst].push_back(e.src);
    }
    std::vector<int> comp(n, -1);
    for (size_t s = 0; s < n; ++s) {
      if (comp[s] != -1) continue;
      std::vector<int> stack{static_cast<int>(s)}, mem;
      comp[s] = static_cast<int>(t.components.size());
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        mem.push_back(v);
        for (int u : adj[v])
          if (comp[u] == -1) {
            comp[u] = comp[s];
            stack.push_back(u);
          }
      }
      std::sort(mem.begin(), mem.end());
      t.contains_top.push_back(std::find(mem.begin(), mem.end(), g.top_node) != mem.end());
      t.components.push_back(std::move(mem));
    }

    if (d != 0) {
      // bracket order at theta = x i pi: [A] has a zero at x = -A/c_A and a
      // pole at x = +A/c_A; survivors carry the extremal (most singular) order
      auto survivors = [&](const Rat& x) {
        std::vector<long> ord(n, 0);
        for (size_t i = 0; i < n; ++i)
          for (const auto& [delta, exp] : sk.tau[i]) {
            if (delta == 0) continue;
            Rat a = delta / g.c_adjoint;
            if (x == -a) ord[i] += exp;
            if (x == a) ord[i] -= exp;
          }
        long lo = ord.empty() ? 0 : *std::min_element(ord.begin(), ord.end());
        std::vector<int> s;
        for (size_t i = 0; i < n; ++i)
          if (ord[i] == lo) s.push_back(static_cast<int>(i));
        return s;
      };
      t.survivors_zero = survivors(t.theta_zero);
      t.survivors_pole = survivors(t.theta_pole);
    } else {
      for (size_t i = 0; i < n; ++i) {
        t.survivors_zero.push_back(static_cast<int>(i));
        t.survivors_pole.push_back(static_cast<int>(i));
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

// ----------------------------------------------------------------- magic square

namespace {

struct MagicSpec {
  int row;
  Rat m;
  std::string family;
  std::vector<int> params;
  int a1_factor = -1;  // row 4: index of the distinguished a1 factor
  int uv_vrep = -1;    // row 4: v with the (U,0) -> (V,1) two-node graph
};

const std::vector<MagicSpec>& magic_table() {
  static const std::vector<MagicSpec> t = {
      {2, Rat(1), "AI", {3}, -1, -1},
      {2, Rat(4), "AII", {6}, -1, -1},
      {2, Rat(8), "EIV", {}, -1, -1},
      {3, Rat(1), "CI", {6}, -1, -1},
      {3, Rat(2), "AIII", {6, 3}, -1, -1},
      {3, Rat(4), "DIII", {12}, -1, -1},
      {3, Rat(8), "EVII", {}, -1, -1},
      {4, Rat(0), "BDI", {8, 4}, 3, 1},
      {4, Rat(1), "FI", {}, 1, 4},
      {4, Rat(2), "EII", {}, 1, 1},
      {4, Rat(4), "EVI", {}, 1, 7},
      {4, Rat(8), "EIX", {}, 1, -1},
      {4, Rat(-2, 3), "G", {}, 1, 1},
  };
  return t;
}

std::string relation_of(const Rat& computed, const Rat& formula) {
  if (computed == formula) return "exact";
  if (computed == -formula) return "flip";
  if (formula != 0 && computed != 0) {
    Rat s = computed / formula;
    return "scale " + s.get_str();
  }
  return "mismatch";
}

MagicLabel make_label(const Rat& computed, const Rat& formula) {
  return {computed, formula, relation_of(computed, formula)};
}

}  // namespace

std::vector<std::pair<int, Rat>> magic_cells() {
  std::vector<std::pair<int, Rat>> out;
  for (const auto& s : magic_table()) out.emplace_back(s.row, s.m);
  return out;
}

MagicCell magic_square(int row, const Rat& m, std::size_t cap) {
  const MagicSpec* spec = nullptr;
  for (const auto& s : magic_table())
    if (s.row == row && s.m == m) spec = &s;
  if (!spec) fail(errc::not_in_catalogue, "no magic square pair at this (row, m) cell");

  SymmetricPair p = instantiate(spec->family, spec->params, 1, cap);
  MagicCell cell;
  cell.row = row;
  cell.m = m;
  cell.pair_string = p.pair_string;
  cell.k_dim = p.dim_k;

  Rat ck = composite_casimir(p, p.k_rep[0]);

  if (row == 2) {
    cell.k_dim_formula = Int(rat_to_int64(3 * m + 2));
    Rat ch = composite_casimir(p, h_factor_adjoint(p.h, 0));
    for (size_t i = 1; i < p.h.factors.size(); ++i)
      if (composite_casimir(p, h_factor_adjoint(p.h, i)) != ch)
        fail(errc::validation_failure, "row-2 h is not isotypic");
    cell.labels.push_back(make_label(ch - ck, 2 * m - 4));
    cell.labels.push_back(make_label(ck, 3 * m));
  } else if (row == 3) {
    cell.k_dim_formula = Int(rat_to_int64(2 * (3 * m + 3)));
    Rat ch = composite_casimir(p, h_factor_adjoint(p.h, 0));
    cell.labels.push_back(make_label(ch - ck, m - 2));
    cell.labels.push_back(make_label(ck, 2 * m + 2));
  } else {
    cell.k_dim_formula = Int(rat_to_int64(2 * (6 * m + 8)));
    Rat c_last = composite_casimir(p, h_factor_adjoint(p.h, spec->a1_factor));
    std::optional<Rat> c_first;
    for (int i = 0; i < static_cast<int>(p.h.factors.size()); ++i) {
      if (i == spec->a1_factor) continue;
      Rat ci = composite_casimir(p, h_factor_adjoint(p.h, i));
      if (c_first && *c_first != ci)
        fail(errc::validation_failure, "row-4 h part is not isotypic");
      c_first = ci;
    }
    cell.labels.push_back(make_label(*c_first - ck, m - 2));
    cell.labels.push_back(make_label(ck - c_last, 3 * m + 2));
    if (spec->uv_vrep >= 0) {
      BranchingGraph g = branching_graph(p, yrep(p.g, spec->uv_vrep), cap);
      if (g.nodes.size() != 2 || g.edges.size() != 1)
        fail(errc::validation_failure, "expected a two-node (U,0) -> (V,1) graph");
      auto trivial_last = [&](int node) {
        const auto& w = g.nodes[node].members[0].irrep;
        return std::all_of(w.labels[spec->a1_factor].begin(), w.labels[spec->a1_factor].end(),
                           [](int c) { return c == 0; });
      };
      const auto& e = g.edges[0];
      Rat d = trivial_last(e.src) ? e.delta : Rat(-e.delta);
      cell.uv_label = make_label(d, m);
    }
  }
  cell.k_dim_exact = cell.k_dim == cell.k_dim_formula;
  return cell;
}

}  // namespace ykm
