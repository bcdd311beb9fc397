#pragma once

// Test-side oracles, independent of the library implementation paths they
// check: Weyl-orbit root closure, Kostant partition multiplicities, and
// character-multiplication tensor decomposition.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ykm/rootsystem.hpp"

namespace oracle {

using ykm::Int;
using ykm::Rat;
using ykm::RootSystem;
using ykm::Weight;

// all roots as the closure of the simple roots under simple reflections
inline std::set<Weight> roots_by_reflection(const RootSystem& rs) {
  int n = rs.rank();
  std::set<Weight> seen;
  std::vector<Weight> frontier;
  for (int i = 0; i < n; ++i) {
    Weight a(rs.cartan()[i].begin(), rs.cartan()[i].end());
    if (seen.insert(a).second) frontier.push_back(a);
  }
  while (!frontier.empty()) {
    Weight v = frontier.back();
    frontier.pop_back();
    for (int i = 0; i < n; ++i) {
      Weight u(v);
      int c = v[i];
      for (int j = 0; j < n; ++j) u[j] -= c * rs.cartan()[i][j];
      if (seen.insert(u).second) frontier.push_back(u);
    }
  }
  return seen;
}

// express a weight over the simple roots; nullopt if not in the root lattice
inline std::optional<std::vector<Int>> to_root_coords(const RootSystem& rs, const Weight& w) {
  int n = rs.rank();
  // solve c^T A = w exactly
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(rs.cartan()[j][i]);  // transposed
    m[i][n] = Rat(w[i]);
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    Rat inv = 1 / m[col][col];
    for (int j = 0; j <= n; ++j) m[col][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = 0; j <= n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  std::vector<Int> out;
  for (int i = 0; i < n; ++i) {
    Rat v = m[i][n];
    v.canonicalize();
    if (v.get_den() != 1) return std::nullopt;
    out.push_back(v.get_num());
  }
  return out;
}

class KostantOracle {
public:
  explicit KostantOracle(const RootSystem& rs) : rs_(rs) {
    for (const auto& r : rs.positive_roots()) pos_.push_back(r.srt);
  }

  // Kostant partition function: number of ways to write v (simple-root
  // coordinates) as an N-combination of positive roots
  Int partitions(const std::vector<Int>& v) { return count(v, 0); }

  // weight multiplicity via the Kostant formula
  Int multiplicity(const Weight& hw, const Weight& mu) {
    int n = rs_.rank();
    Weight top(hw);
    for (int i = 0; i < n; ++i) top[i] += 1;
    // signed Weyl orbit of hw + rho
    std::map<Weight, int> orbit;
    std::vector<Weight> frontier{top};
    orbit[top] = 1;
    while (!frontier.empty()) {
      Weight v = frontier.back();
      frontier.pop_back();
      int sign = orbit[v];
      for (int i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        Weight u(v);
        int c = v[i];
        for (int j = 0; j < n; ++j) u[j] -= c * rs_.cartan()[i][j];
        if (!orbit.count(u)) {
          orbit[u] = -sign;
          frontier.push_back(u);
        }
      }
    }
    Int total(0);
    for (const auto& [v, sign] : orbit) {
      Weight diff(v);
      for (int i = 0; i < n; ++i) diff[i] -= mu[i] + 1;
      auto coords = to_root_coords(rs_, diff);
      if (!coords) continue;
      bool neg = false;
      for (const auto& c : *coords) neg = neg || c < 0;
      if (neg) continue;
      total += sign * partitions(*coords);
    }
    return total;
  }

private:
  Int count(const std::vector<Int>& v, size_t from) {
    bool zero = true;
    for (const auto& c : v) zero = zero && c == 0;
    if (zero) return 1;
    if (from >= pos_.size()) return 0;
    auto key = std::make_pair(v, from);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    // use root `from` k times, k = 0,1,...
    Int total(0);
    std::vector<Int> rest(v);
    while (true) {
      total += count(rest, from + 1);
      bool fits = true;
      for (size_t i = 0; i < rest.size(); ++i) {
        rest[i] -= pos_[from][i];
        if (rest[i] < 0) fits = false;
      }
      if (!fits) break;
    }
    memo_.emplace(key, total);
    return total;
  }

  const RootSystem& rs_;
  std::vector<std::vector<int>> pos_;
  std::map<std::pair<std::vector<Int>, size_t>, Int> memo_;
};

// tensor decomposition by multiplying full characters and peeling highest
// weights; independent of the Brauer-Klimyk route
inline std::map<Weight, Int> tensor_by_characters(const RootSystem& rs, const Weight& a,
                                                  const Weight& b) {
  auto wa = rs.weight_multiplicities(a);
  auto wb = rs.weight_multiplicities(b);
  int n = rs.rank();
  std::map<Weight, Int> prod;
  for (const auto& [x, mx] : wa)
    for (const auto& [y, my] : wb) {
      Weight s(x);
      for (int i = 0; i < n; ++i) s[i] += y[i];
      prod[s] += mx * my;
    }
  std::map<Weight, Int> out;
  while (!prod.empty()) {
    // highest remaining weight by (rho-pairing, lex) order
    auto best = prod.end();
    long best_h = 0;
    for (auto it = prod.begin(); it != prod.end(); ++it) {
      if (it->second == 0) continue;
      long h = rs.inner_num(it->first, rs.weyl_vector());
      if (best == prod.end() || h > best_h || (h == best_h && it->first > best->first)) {
        best = it;
        best_h = h;
      }
    }
    if (best == prod.end()) break;
    Weight hw = best->first;
    Int mult = best->second;
    if (mult < 0) throw std::runtime_error("character peel went negative");
    for (const auto& [w, m] : rs.weight_multiplicities(hw)) {
      auto it = prod.find(w);
      it->second -= mult * m;
      if (it->second == 0) prod.erase(it);
    }
    out[hw] = mult;
  }
  return out;
}

}  // namespace oracle
