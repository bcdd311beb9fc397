#include "ykm/rootsystem.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace ykm {

std::string weight_str(const Weight& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

Weight parse_weight(const std::string& s, int rank) {
  Weight w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      w.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad weight component: " + tok);
    }
  }
  if (static_cast<int>(w.size()) != rank)
    fail(errc::parse_error, "weight has " + std::to_string(w.size()) + " labels, expected " +
                                std::to_string(rank));
  return w;
}

Weight fund_weight(int i, int rank) {
  if (i < 1 || i > rank) fail(errc::bad_params, "fundamental weight index out of range");
  Weight w(rank, 0);
  w[i - 1] = 1;
  return w;
}

RootSystem::RootSystem(LieType t) : type_(t) {
  build_cartan();
  int n = rank();

  // F_{ij} = (A^{-1})_{ij} d_j, computed by exact elimination.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(cartan_[i][j]);
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    Rat inv = 1 / m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  form_.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) form_[i][j] = m[i][n + j] * d_[j];

  // integer fast path: form_num_ = form * form_den_
  Int den(1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) den = lcm(den, Int(form_[i][j].get_den()));
  form_den_ = to_int64(den);
  form_num_.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = form_[i][j] * Rat(form_den_);
      form_num_[i][j] = static_cast<long>(rat_to_int64(v));
    }

  build_positive_roots();
  rho_.assign(n, 1);
}

void RootSystem::build_cartan() {
  int n = rank();
  cartan_.assign(n, std::vector<int>(n, 0));
  d_.assign(n, Rat(1));
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based single edge
    cartan_[i - 1][j - 1] = -1;
    cartan_[j - 1][i - 1] = -1;
  };

  switch (type_.series) {
    case Series::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Series::B:
      // chain 1..n-1 long, spin node n short
      for (int i = 1; i + 1 < n; ++i) link(i, i + 1);
      cartan_[n - 2][n - 1] = -2;
      cartan_[n - 1][n - 2] = -1;
      d_[n - 1] = Rat(1, 2);
      break;
    case Series::C:
      // chain 1..n-1 short, node n long
      for (int i = 1; i + 1 < n; ++i) link(i, i + 1);
      cartan_[n - 2][n - 1] = -1;
      cartan_[n - 1][n - 2] = -2;
      for (int i = 0; i + 1 < n; ++i) d_[i] = Rat(1, 2);
      break;
    case Series::D:
      // chain 1..n-2, spin nodes s = n-1 and s' = n attached to n-2
      for (int i = 1; i + 1 <= n - 2; ++i) link(i, i + 1);
      link(n - 2, n - 1);
      link(n - 2, n);
      break;
    case Series::E:
      // chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4
      link(1, 3);
      link(3, 4);
      link(4, 5);
      link(5, 6);
      if (n >= 7) link(6, 7);
      if (n >= 8) link(7, 8);
      link(2, 4);
      break;
    case Series::F:
      // 1-2=>3-4, nodes 1,2 long
      link(1, 2);
      link(3, 4);
      cartan_[1][2] = -2;
      cartan_[2][1] = -1;
      d_[2] = Rat(1, 2);
      d_[3] = Rat(1, 2);
      break;
    case Series::G:
      // node 1 short, node 2 long
      cartan_[0][1] = -1;
      cartan_[1][0] = -3;
      d_[0] = Rat(1, 3);
      break;
  }
}

void RootSystem::build_positive_roots() {
  int n = rank();
  std::set<std::vector<int>> seen;
  std::vector<PosRoot> roots;
  for (int i = 0; i < n; ++i) {
    PosRoot r;
    r.srt.assign(n, 0);
    r.srt[i] = 1;
    r.dynkin.assign(cartan_[i].begin(), cartan_[i].end());
    seen.insert(r.srt);
    roots.push_back(std::move(r));
  }
  // level-by-level root strings: alpha + alpha_j is a root iff
  // p - <alpha, alpha_j^vee> > 0 with p the depth of the string below alpha
  for (size_t idx = 0; idx < roots.size(); ++idx) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> down = roots[idx].srt;
      int p = 0;
      while (true) {
        down[j] -= 1;
        if (std::all_of(down.begin(), down.end(), [](int c) { return c == 0; })) break;
        if (!seen.count(down)) break;
        ++p;
      }
      if (p - roots[idx].dynkin[j] > 0) {
        std::vector<int> up = roots[idx].srt;
        up[j] += 1;
        if (!seen.insert(up).second) continue;
        PosRoot r;
        r.srt = std::move(up);
        r.dynkin = roots[idx].dynkin;
        for (int k = 0; k < n; ++k) r.dynkin[k] += cartan_[j][k];
        roots.push_back(std::move(r));
      }
    }
  }
  positive_ = std::move(roots);
  for (auto& r : positive_) r.len2 = inner(r.dynkin, r.dynkin);
  std::stable_sort(positive_.begin(), positive_.end(), [](const PosRoot& a, const PosRoot& b) {
    int ha = std::accumulate(a.srt.begin(), a.srt.end(), 0);
    int hb = std::accumulate(b.srt.begin(), b.srt.end(), 0);
    if (ha != hb) return ha < hb;
    return a.srt < b.srt;
  });
  highest_root_ = positive_.back().dynkin;
}

long RootSystem::inner_num(const Weight& a, const Weight& b) const {
  int n = rank();
  long s = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    long row = 0;
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      row += form_num_[i][j] * b[j];
    }
    s += a[i] * row;
  }
  return s;
}

Rat RootSystem::inner(const Weight& a, const Weight& b) const {
  int n = rank();
  Rat s(0);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    Rat row(0);
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      row += form_[i][j] * Rat(b[j]);
    }
    s += Rat(a[i]) * row;
  }
  return s;
}

bool RootSystem::is_dominant(const Weight& w) const {
  return std::all_of(w.begin(), w.end(), [](int c) { return c >= 0; });
}

Int RootSystem::dimension(const Weight& hw) const {
  if (!is_dominant(hw)) fail(errc::not_dominant, "dimension: weight not dominant");
  int n = rank();
  Weight shifted(hw);
  for (int i = 0; i < n; ++i) shifted[i] += 1;
  Rat prod(1);
  for (const auto& alpha : positive_) {
    prod *= Rat(inner_num(shifted, alpha.dynkin), inner_num(rho_, alpha.dynkin));
  }
  prod.canonicalize();
  if (prod.get_den() != 1) fail(errc::validation_failure, "Weyl dimension is not an integer");
  return prod.get_num();
}

Rat RootSystem::casimir(const Weight& hw) const {
  if (!is_dominant(hw)) fail(errc::not_dominant, "casimir: weight not dominant");
  Weight shifted(hw);
  for (int i = 0; i < rank(); ++i) shifted[i] += 2;
  return inner(hw, shifted);
}

Rat RootSystem::adjoint_casimir() const { return casimir(highest_root_); }

std::pair<Weight, int> RootSystem::reflect_to_dominant(const Weight& w) const {
  int n = rank();
  Weight v(w);
  for (int i = 0; i < n; ++i) v[i] += 1;
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < n; ++i) {
      if (v[i] == 0) return {Weight(n, 0), 0};
      if (v[i] < 0) {
        int c = v[i];
        for (int j = 0; j < n; ++j) v[j] -= c * cartan_[i][j];
        sign = -sign;
        moved = true;
      }
    }
  }
  for (int i = 0; i < n; ++i) v[i] -= 1;
  return {v, sign};
}

Weight RootSystem::dominant_of(const Weight& w) const {
  int n = rank();
  Weight v(w);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < n; ++i) {
      if (v[i] < 0) {
        int c = v[i];
        for (int j = 0; j < n; ++j) v[j] -= c * cartan_[i][j];
        moved = true;
      }
    }
  }
  return v;
}

Weight RootSystem::conjugate(const Weight& hw) const {
  Weight neg(hw);
  for (auto& c : neg) c = -c;
  return dominant_of(neg);
}

std::map<Weight, Int> RootSystem::dominant_multiplicities(const Weight& hw,
                                                          std::size_t cap) const {
  if (!is_dominant(hw)) fail(errc::not_dominant, "weight multiplicities: weight not dominant");
  int n = rank();
  long norm_hw = inner_num(hw, hw);

  // candidate cone hw - N.span(simple roots), pruned to |v|^2 <= |hw|^2;
  // non-weights in the cone drop out of Freudenthal with multiplicity 0
  std::set<Weight> visited;
  std::deque<Weight> frontier;
  std::vector<Weight> dominants;
  visited.insert(hw);
  frontier.push_back(hw);
  while (!frontier.empty()) {
    Weight v = frontier.front();
    frontier.pop_front();
    if (is_dominant(v)) dominants.push_back(v);
    for (int i = 0; i < n; ++i) {
      Weight u(v);
      for (int j = 0; j < n; ++j) u[j] -= cartan_[i][j];
      if (visited.count(u)) continue;
      if (inner_num(u, u) > norm_hw) continue;
      visited.insert(u);
      if (visited.size() > cap)
        fail(errc::resource_limit, "weight multiplicities: candidate set exceeds cap");
      frontier.push_back(u);
    }
  }

  auto height = [&](const Weight& mu) { return inner_num(hw, rho_) - inner_num(mu, rho_); };
  std::stable_sort(dominants.begin(), dominants.end(), [&](const Weight& a, const Weight& b) {
    long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  std::map<Weight, Int> mult;
  Weight shifted_hw(hw);
  for (int i = 0; i < n; ++i) shifted_hw[i] += 1;
  long norm_shifted_hw = inner_num(shifted_hw, shifted_hw);

  for (const auto& mu : dominants) {
    if (mu == hw) {
      mult[mu] = 1;
      continue;
    }
    Rat acc(0);
    for (const auto& alpha : positive_) {
      Weight nu(mu);
      while (true) {
        for (int j = 0; j < n; ++j) nu[j] += alpha.dynkin[j];
        if (inner_num(nu, nu) > norm_hw) break;
        Weight dom = dominant_of(nu);
        auto it = mult.find(dom);
        if (it == mult.end()) continue;
        acc += Rat(it->second) * Rat(inner_num(nu, alpha.dynkin), form_den_);
      }
    }
    Weight shifted_mu(mu);
    for (int i = 0; i < n; ++i) shifted_mu[i] += 1;
    Rat denom = Rat(norm_shifted_hw - inner_num(shifted_mu, shifted_mu), form_den_);
    Rat m = 2 * acc / denom;
    m.canonicalize();
    if (m.get_den() != 1) fail(errc::validation_failure, "Freudenthal produced non-integer");
    if (m != 0) mult[mu] = Int(m.get_num());
  }
  return mult;
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& dominant, std::size_t cap) const {
  if (!is_dominant(dominant)) fail(errc::not_dominant, "weyl_orbit: weight not dominant");
  int n = rank();
  std::set<Weight> seen{dominant};
  std::deque<Weight> frontier{dominant};
  while (!frontier.empty()) {
    Weight v = frontier.front();
    frontier.pop_front();
    for (int i = 0; i < n; ++i) {
      if (v[i] <= 0) continue;
      Weight u(v);
      int c = v[i];
      for (int j = 0; j < n; ++j) u[j] -= c * cartan_[i][j];
      if (seen.insert(u).second) {
        if (seen.size() > cap) fail(errc::resource_limit, "weyl_orbit: orbit exceeds cap");
        frontier.push_back(u);
      }
    }
  }
  return std::vector<Weight>(seen.begin(), seen.end());
}

std::map<Weight, Int> RootSystem::weight_multiplicities(const Weight& hw, std::size_t cap) const {
  auto dom = dominant_multiplicities(hw, cap);
  std::map<Weight, Int> all;
  std::size_t total = 0;
  for (const auto& [mu, m] : dom) {
    for (const auto& w : weyl_orbit(mu, cap)) {
      all[w] = m;
      if (++total > cap) fail(errc::resource_limit, "weight system exceeds cap");
    }
  }
  return all;
}

namespace {
std::mutex registry_mutex;
}

const RootSystem& root_system(LieType t) {
  static std::map<LieType, std::unique_ptr<const RootSystem>> registry;
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto it = registry.find(t);
  if (it == registry.end()) it = registry.emplace(t, std::make_unique<RootSystem>(t)).first;
  return *it->second;
}

const std::map<Weight, Int>& cached_weights(LieType t, const Weight& hw, std::size_t cap) {
  static std::map<std::pair<LieType, Weight>, std::unique_ptr<const std::map<Weight, Int>>> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_pair(t, hw);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto ws = root_system(t).weight_multiplicities(hw, cap);
    it = cache.emplace(key, std::make_unique<std::map<Weight, Int>>(std::move(ws))).first;
  }
  return *it->second;
}

}  // namespace ykm
