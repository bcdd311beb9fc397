#include "ykm/pairs.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace ykm {

namespace {

using Mat = std::vector<std::vector<Rat>>;

Mat zeros(size_t r, size_t c) { return Mat(r, std::vector<Rat>(c, Rat(0))); }

Mat matmul(const Mat& a, const Mat& b) {
  size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  Mat out = zeros(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

// Dynkin labels -> orthogonal coordinates, per classical series.
Mat dynkin_to_eps(Series s, int n) {
  switch (s) {
    case Series::A: {
      Mat m = zeros(n + 1, n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m[i][j] = 1;
      return m;
    }
    case Series::B: {
      Mat m = zeros(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = i; j < n - 1; ++j) m[i][j] = 1;
        m[i][n - 1] = Rat(1, 2);
      }
      return m;
    }
    case Series::C: {
      Mat m = zeros(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m[i][j] = 1;
      return m;
    }
    case Series::D: {
      Mat m = zeros(n, n);
      for (int i = 0; i < n - 1; ++i) {
        for (int j = i; j < n - 2; ++j) m[i][j] = 1;
        m[i][n - 2] = Rat(1, 2);
        m[i][n - 1] = Rat(1, 2);
      }
      m[n - 1][n - 2] = Rat(-1, 2);
      m[n - 1][n - 1] = Rat(1, 2);
      return m;
    }
    default: fail(errc::bad_params, "dynkin_to_eps: classical series only");
  }
}

// orthogonal coordinates -> Dynkin labels; for B and D the formulas
// degenerate correctly at ranks 1 and 2 (so3, so4 label conventions)
Mat eps_to_dynkin(Series s, int n) {
  switch (s) {
    case Series::A: {
      Mat m = zeros(n, n + 1);
      for (int i = 0; i < n; ++i) {
        m[i][i] = 1;
        m[i][i + 1] = -1;
      }
      return m;
    }
    case Series::B: {
      Mat m = zeros(n, n);
      for (int i = 0; i < n - 1; ++i) {
        m[i][i] = 1;
        m[i][i + 1] = -1;
      }
      m[n - 1][n - 1] = 2;
      return m;
    }
    case Series::C: {
      Mat m = zeros(n, n);
      for (int i = 0; i < n - 1; ++i) {
        m[i][i] = 1;
        m[i][i + 1] = -1;
      }
      m[n - 1][n - 1] = 1;
      return m;
    }
    case Series::D: {
      Mat m = zeros(n, n);
      for (int i = 0; i < n - 2; ++i) {
        m[i][i] = 1;
        m[i][i + 1] = -1;
      }
      m[n - 2][n - 2] = 1;
      m[n - 2][n - 1] = -1;
      m[n - 1][n - 2] = 1;
      m[n - 1][n - 1] = 1;
      return m;
    }
    default: fail(errc::bad_params, "eps_to_dynkin: classical series only");
  }
}

struct EpsBlocks {
  std::vector<LieType> factors;
  std::vector<Mat> factor_rows;  // over the full h-ambient epsilon space
  std::optional<std::vector<Rat>> charge_row;
  bool degenerate = false;
};

Mat embed_cols(const Mat& m, int offset, int ambient) {
  Mat out = zeros(m.size(), ambient);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) out[i][offset + j] = m[i][j];
  return out;
}

// orthogonal factor so(m) on floor(m/2) coordinates starting at offset
void add_so_block(EpsBlocks& out, int m, int offset, int ambient) {
  if (m <= 1) {
    if (m == 1) out.degenerate = true;
    return;
  }
  if (m == 2) {
    if (out.charge_row) fail(errc::bad_params, "more than one u(1) factor");
    std::vector<Rat> row(ambient, Rat(0));
    row[offset] = 1;
    out.charge_row = row;
    out.degenerate = true;
    return;
  }
  if (m == 3) {
    Mat rows = zeros(1, 1);
    rows[0][0] = 2;
    out.factors.push_back(make_type(Series::A, 1));
    out.factor_rows.push_back(embed_cols(rows, offset, ambient));
    return;
  }
  if (m == 4) {
    Mat r1 = zeros(1, 2), r2 = zeros(1, 2);
    r1[0][0] = 1;
    r1[0][1] = -1;
    r2[0][0] = 1;
    r2[0][1] = 1;
    out.factors.push_back(make_type(Series::A, 1));
    out.factor_rows.push_back(embed_cols(r1, offset, ambient));
    out.factors.push_back(make_type(Series::A, 1));
    out.factor_rows.push_back(embed_cols(r2, offset, ambient));
    return;
  }
  int k = m / 2;
  Series s = (m % 2 == 1) ? Series::B : Series::D;
  out.factors.push_back(make_type(s, k));
  out.factor_rows.push_back(embed_cols(eps_to_dynkin(s, k), offset, ambient));
}

void add_sp_block(EpsBlocks& out, int twom, int offset, int ambient) {
  int m = twom / 2;
  if (m == 1) {
    Mat rows = zeros(1, 1);
    rows[0][0] = 1;
    out.factors.push_back(make_type(Series::A, 1));
    out.factor_rows.push_back(embed_cols(rows, offset, ambient));
    return;
  }
  out.factors.push_back(make_type(Series::C, m));
  out.factor_rows.push_back(embed_cols(eps_to_dynkin(Series::C, m), offset, ambient));
}

// so(m) labels of the vector and of twice the first epsilon weight,
// in the factor conventions produced by add_so_block
// labels of coeff * e_1 in the factor conventions of add_so_block
std::vector<Weight> so_block_weight(int m, int coeff) {
  if (m == 3) return {Weight{2 * coeff}};
  if (m == 4) return {Weight{coeff}, Weight{coeff}};
  Weight w(m / 2, 0);
  w[0] = coeff;
  return {w};
}

struct RawPair {
  std::string family;
  std::vector<int> params;
  std::string pair_string;
  LieType g;
  HAlgebra h;
  Projection proj;
  // expected K pieces as per-factor label vectors; empty = structural only
  std::vector<std::vector<Weight>> expected_k;
  // restriction witness: g-weight must branch to a piece with these labels
  std::optional<std::pair<Weight, std::vector<Weight>>> witness;
  bool degenerate = false;
  std::string note;
};

Projection assemble(const EpsBlocks& blocks, const Mat& to_h_eps) {
  Projection p;
  for (const auto& rows : blocks.factor_rows) p.blocks.push_back(matmul(rows, to_h_eps));
  if (blocks.charge_row) {
    Mat cr = matmul(Mat{*blocks.charge_row}, to_h_eps);
    p.charge_row = cr[0];
  }
  return p;
}

std::vector<Rat> selector_row(int node, int rank) {
  std::vector<Rat> r(rank, Rat(0));
  r[node - 1] = 1;
  return r;
}

std::vector<Rat> minus_theta_row(const RootSystem& g) {
  int n = g.rank();
  std::vector<Rat> r(n);
  const Weight& theta = g.highest_root();
  for (int k = 0; k < n; ++k) r[k] = -2 * g.inner(fund_weight(k + 1, n), theta) / g.inner(theta, theta);
  return r;
}

// charge direction for h-tilde = diagram minus one node: column d of A^{-1}
std::vector<Rat> deleted_node_charge_row(const RootSystem& g, int node) {
  int n = g.rank();
  Mat m = zeros(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(g.cartan()[i][j]);
    m[i][n] = (i == node - 1) ? 1 : 0;
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
  std::vector<Rat> r(n);
  for (int i = 0; i < n; ++i) r[i] = m[i][n];
  return r;
}

void normalize_charge_row(std::vector<Rat>& row) {
  Int l(1), g(0);
  for (const auto& v : row) l = lcm(l, Int(v.get_den()));
  for (auto& v : row) v *= Rat(l);
  for (const auto& v : row) g = gcd(g, Int(v.get_num()));
  if (g == 0) fail(errc::validation_failure, "charge row is zero");
  for (auto& v : row) {
    v /= Rat(g);
    v.canonicalize();
  }
  for (const auto& v : row) {
    if (v != 0) {
      if (v < 0)
        for (auto& w : row) w = -w;
      break;
    }
  }
}

// ---------------------------------------------------------------- builders

RawPair build_AI(int N) {
  if (N < 2) fail(errc::bad_params, "AI needs N >= 2");
  RawPair r;
  r.family = "AI";
  r.params = {N};
  r.g = make_type(Series::A, N - 1);
  int k = N / 2;
  // y_i = x_{2i-1} - x_{2i} maps the defining weights onto the vector of so(N)
  Mat y = zeros(k, N);
  for (int i = 0; i < k; ++i) {
    y[i][2 * i] = 1;
    y[i][2 * i + 1] = -1;
  }
  Mat to_h_eps = matmul(y, dynkin_to_eps(Series::A, N - 1));
  EpsBlocks blocks;
  add_so_block(blocks, N, 0, k);
  r.h.factors = blocks.factors;
  r.h.has_u1 = blocks.charge_row.has_value();
  r.proj = assemble(blocks, to_h_eps);
  r.degenerate = blocks.degenerate;
  if (N >= 3) r.expected_k = {so_block_weight(N, 2)};
  r.pair_string = "su" + std::to_string(N) + "/so" + std::to_string(N);
  return r;
}

RawPair build_AII(int N) {
  if (N < 4 || N % 2 != 0) fail(errc::bad_params, "AII needs even N >= 4");
  RawPair r;
  r.family = "AII";
  r.params = {N};
  r.g = make_type(Series::A, N - 1);
  int k = N / 2;
  Mat y = zeros(k, N);
  for (int i = 0; i < k; ++i) {
    y[i][2 * i] = 1;
    y[i][2 * i + 1] = -1;
  }
  Mat to_h_eps = matmul(y, dynkin_to_eps(Series::A, N - 1));
  EpsBlocks blocks;
  add_sp_block(blocks, N, 0, k);
  r.h.factors = blocks.factors;
  r.h.has_u1 = false;
  r.proj = assemble(blocks, to_h_eps);
  {
    Weight w(k, 0);
    if (k >= 2) w[1] = 1;  // lambda_2
    r.expected_k = {{w}};
  }
  r.pair_string = "su" + std::to_string(N) + "/sp" + std::to_string(N);
  return r;
}

RawPair build_AIII(int N, int M) {
  if (N < 2 || M < 1 || M >= N) fail(errc::bad_params, "AIII needs 1 <= M <= N-1");
  RawPair r;
  r.family = "AIII";
  r.params = {N, M};
  r.g = make_type(Series::A, N - 1);
  Projection p;
  if (M >= 2) {
    Mat rows;
    for (int j = 1; j <= M - 1; ++j) rows.push_back(selector_row(j, N - 1));
    p.blocks.push_back(rows);
    r.h.factors.push_back(make_type(Series::A, M - 1));
  }
  if (N - M >= 2) {
    Mat rows;
    for (int j = M + 1; j <= N - 1; ++j) rows.push_back(selector_row(j, N - 1));
    p.blocks.push_back(rows);
    r.h.factors.push_back(make_type(Series::A, N - M - 1));
  }
  p.charge_row = deleted_node_charge_row(root_system(r.g), M);
  r.h.has_u1 = true;
  r.proj = p;
  r.degenerate = (M == 1) || (N - M == 1);
  r.note =
      "K stored as computed from the adjoint branching; the heading reading is "
      "(lambda_1, lambda_{N-M-1}) (+) (lambda_{M-1}, lambda_1)";
  std::string h;
  if (M >= 2) h += "su" + std::to_string(M) + "x";
  if (N - M >= 2) h += "su" + std::to_string(N - M) + "x";
  h += "u1";
  r.pair_string = "su" + std::to_string(N) + "/" + h;
  return r;
}

RawPair build_BDI(int N, int M) {
  if (N < 5) fail(errc::bad_params, "BDI needs so(N) with N >= 5");
  if (M < 1 || M >= N) fail(errc::bad_params, "BDI needs 1 <= M <= N-1");
  RawPair r;
  r.family = "BDI";
  r.params = {N, M};
  Series s = (N % 2 == 1) ? Series::B : Series::D;
  int k = N / 2;
  r.g = make_type(s, k);
  Mat to_h_eps = dynkin_to_eps(s, k);
  EpsBlocks blocks;
  int m1 = M / 2;
  add_so_block(blocks, M, 0, k);
  add_so_block(blocks, N - M, m1, k);
  r.h.factors = blocks.factors;
  r.h.has_u1 = blocks.charge_row.has_value();
  r.proj = assemble(blocks, to_h_eps);
  r.degenerate = blocks.degenerate;
  {
    std::vector<Weight> piece;
    if (M >= 3)
      for (auto& w : so_block_weight(M, 1)) piece.push_back(w);
    if (N - M >= 3)
      for (auto& w : so_block_weight(N - M, 1)) piece.push_back(w);
    if (r.h.has_u1)
      r.expected_k = {piece, piece};  // two charge-conjugate copies of the vector
    else
      r.expected_k = {piece};
  }
  auto so_str = [](int m) { return "so" + std::to_string(m); };
  std::string h;
  if (M >= 2) h = so_str(M);
  if (N - M >= 2) h += (h.empty() ? "" : "x") + so_str(N - M);
  if (h.empty()) h = "so" + std::to_string(N - 1);
  r.pair_string = so_str(N) + "/" + h;
  return r;
}

RawPair build_CII(int N, int M) {
  if (N < 4 || N % 2 != 0 || M < 2 || M % 2 != 0 || M >= N)
    fail(errc::bad_params, "CII needs even 2 <= M <= N-2");
  RawPair r;
  r.family = "CII";
  r.params = {N, M};
  int n = N / 2, m = M / 2;
  r.g = make_type(Series::C, n);
  Mat to_h_eps = dynkin_to_eps(Series::C, n);
  EpsBlocks blocks;
  add_sp_block(blocks, M, 0, n);
  add_sp_block(blocks, N - M, m, n);
  r.h.factors = blocks.factors;
  r.h.has_u1 = false;
  r.proj = assemble(blocks, to_h_eps);
  {
    std::vector<Weight> piece;
    piece.push_back([&] {
      Weight w(m, 0);
      w[0] = 1;
      return w;
    }());
    piece.push_back([&] {
      Weight w(n - m, 0);
      w[0] = 1;
      return w;
    }());
    r.expected_k = {piece};
  }
  r.pair_string = "sp" + std::to_string(N) + "/sp" + std::to_string(M) + "xsp" + std::to_string(N - M);
  return r;
}

RawPair build_CI(int N) {
  if (N < 4 || N % 2 != 0) fail(errc::bad_params, "CI needs even N >= 4");
  RawPair r;
  r.family = "CI";
  r.params = {N};
  int n = N / 2;
  r.g = make_type(Series::C, n);
  Projection p;
  Mat rows;
  for (int j = 1; j <= n - 1; ++j) rows.push_back(selector_row(j, n));
  p.blocks.push_back(rows);
  p.charge_row = deleted_node_charge_row(root_system(r.g), n);
  r.h.factors.push_back(make_type(Series::A, n - 1));
  r.h.has_u1 = true;
  r.proj = p;
  {
    Weight a(n - 1, 0), b(n - 1, 0);
    a[0] = 2;
    b[n - 2] = 2;
    r.expected_k = {{a}, {b}};
  }
  r.pair_string = "sp" + std::to_string(N) + "/su" + std::to_string(n) + "xu1";
  return r;
}

RawPair build_DIII(int N) {
  if (N < 6 || N % 2 != 0) fail(errc::bad_params, "DIII needs even N >= 6");
  RawPair r;
  r.family = "DIII";
  r.params = {N};
  int n = N / 2;
  r.g = make_type(Series::D, n);
  Projection p;
  Mat rows;
  for (int j = 1; j <= n - 2; ++j) rows.push_back(selector_row(j, n));
  rows.push_back(selector_row(n - 1, n));  // spin node s completes the a_{n-1} chain
  p.blocks.push_back(rows);
  p.charge_row = deleted_node_charge_row(root_system(r.g), n);
  r.h.factors.push_back(make_type(Series::A, n - 1));
  r.h.has_u1 = true;
  r.proj = p;
  {
    Weight a(n - 1, 0), b(n - 1, 0);
    a[1] = 1;
    b[n - 3] = 1;
    r.expected_k = {{a}, {b}};
  }
  r.pair_string = "so" + std::to_string(N) + "/su" + std::to_string(n) + "xu1";
  return r;
}

struct NodeChain {
  LieType type;
  std::vector<int> nodes;  // g-node indices, 0 = -theta; listed in the subalgebra's own node order
};

RawPair build_extended(const std::string& family, LieType g, const std::vector<NodeChain>& chains,
                       std::vector<std::vector<Weight>> expected_k, const std::string& pair_string,
                       std::optional<std::pair<Weight, std::vector<Weight>>> witness = {}) {
  RawPair r;
  r.family = family;
  r.g = g;
  const auto& rs = root_system(g);
  for (const auto& ch : chains) {
    Mat rows;
    for (int node : ch.nodes)
      rows.push_back(node == 0 ? minus_theta_row(rs) : selector_row(node, rs.rank()));
    r.proj.blocks.push_back(rows);
    r.h.factors.push_back(ch.type);
  }
  r.h.has_u1 = false;
  r.expected_k = std::move(expected_k);
  r.witness = std::move(witness);
  r.pair_string = pair_string;
  return r;
}

RawPair build_u1_exceptional(const std::string& family, LieType g, const NodeChain& chain,
                             int deleted_node, std::vector<std::vector<Weight>> expected_k,
                             const std::string& pair_string,
                             std::optional<std::pair<Weight, std::vector<Weight>>> witness = {}) {
  RawPair r;
  r.family = family;
  r.g = g;
  const auto& rs = root_system(g);
  Mat rows;
  for (int node : chain.nodes) rows.push_back(selector_row(node, rs.rank()));
  r.proj.blocks.push_back(rows);
  r.proj.charge_row = deleted_node_charge_row(rs, deleted_node);
  r.h.factors.push_back(chain.type);
  r.h.has_u1 = true;
  r.expected_k = std::move(expected_k);
  r.witness = std::move(witness);
  r.pair_string = pair_string;
  return r;
}

Weight labels(std::initializer_list<int> l) { return Weight(l); }

RawPair build_EI() {
  // c4 inside e6 through the chain e6 > a5 x a1 > c3 x c1 = c4-block split
  RawPair base = build_extended(
      "EII", make_type(Series::E, 6),
      {{make_type(Series::A, 5), {1, 3, 4, 5, 6}}, {make_type(Series::A, 1), {0}}}, {}, "");
  const Mat& a5_rows = base.proj.blocks[0];
  const Mat& a1_rows = base.proj.blocks[1];
  int k = 3;
  Mat y = zeros(k, 6);
  for (int i = 0; i < k; ++i) {
    y[i][2 * i] = 1;
    y[i][2 * i + 1] = -1;
  }
  Mat c3_eps = matmul(matmul(y, dynkin_to_eps(Series::A, 5)), a5_rows);  // 3 x 6 over e6 labels
  Mat c4_eps = c3_eps;
  c4_eps.push_back(a1_rows[0]);  // c1 epsilon coordinate equals the a1 label
  Mat rows = matmul(eps_to_dynkin(Series::C, 4), c4_eps);

  RawPair r;
  r.family = "EI";
  r.g = make_type(Series::E, 6);
  r.proj.blocks.push_back(rows);
  r.h.factors.push_back(make_type(Series::C, 4));
  r.h.has_u1 = false;
  r.expected_k = {{labels({0, 0, 0, 1})}};
  r.pair_string = "e6/c4";
  return r;
}

RawPair build_fixed(const std::string& family) {
  if (family == "EI") return build_EI();
  if (family == "EII")
    return build_extended(
        "EII", make_type(Series::E, 6),
        {{make_type(Series::A, 5), {1, 3, 4, 5, 6}}, {make_type(Series::A, 1), {0}}},
        {{labels({0, 0, 1, 0, 0}), labels({1})}}, "e6/a5xa1",
        std::make_pair(fund_weight(1, 6),
                       std::vector<Weight>{labels({0, 0, 0, 1, 0}), labels({0})}));
  if (family == "EIII")
    return build_u1_exceptional(
        "EIII", make_type(Series::E, 6), {make_type(Series::D, 5), {6, 5, 4, 2, 3}}, 1,
        {{labels({0, 0, 0, 1, 0})}, {labels({0, 0, 0, 0, 1})}}, "e6/d5xu1",
        std::make_pair(fund_weight(1, 6), std::vector<Weight>{labels({0, 0, 0, 0, 1})}));
  if (family == "EIV") {
    RawPair r;
    r.family = "EIV";
    r.g = make_type(Series::E, 6);
    // folding by the diagram involution: f4 nodes from e6 orbits {2},{4},{3,5},{1,6}
    Mat rows = zeros(4, 6);
    rows[0][1] = 1;
    rows[1][3] = 1;
    rows[2][2] = 1;
    rows[2][4] = 1;
    rows[3][0] = 1;
    rows[3][5] = 1;
    r.proj.blocks.push_back(rows);
    r.h.factors.push_back(make_type(Series::F, 4));
    r.h.has_u1 = false;
    r.expected_k = {{labels({0, 0, 0, 1})}};
    r.pair_string = "e6/f4";
    return r;
  }
  if (family == "EV")
    return build_extended("EV", make_type(Series::E, 7),
                          {{make_type(Series::A, 7), {0, 1, 3, 4, 5, 6, 7}}},
                          {{labels({0, 0, 0, 1, 0, 0, 0})}}, "e7/a7");
  if (family == "EVI")
    return build_extended(
        "EVI", make_type(Series::E, 7),
        {{make_type(Series::D, 6), {0, 1, 3, 4, 5, 2}}, {make_type(Series::A, 1), {7}}},
        {{labels({0, 0, 0, 0, 1, 0}), labels({1})}}, "e7/d6xa1");
  if (family == "EVII")
    return build_u1_exceptional("EVII", make_type(Series::E, 7),
                                {make_type(Series::E, 6), {1, 2, 3, 4, 5, 6}}, 7,
                                {{labels({1, 0, 0, 0, 0, 0})}, {labels({0, 0, 0, 0, 0, 1})}},
                                "e7/e6xu1");
  if (family == "EVIII")
    return build_extended("EVIII", make_type(Series::E, 8),
                          {{make_type(Series::D, 8), {0, 8, 7, 6, 5, 4, 3, 2}}},
                          {{labels({0, 0, 0, 0, 0, 0, 1, 0})}}, "e8/d8");
  if (family == "EIX")
    return build_extended(
        "EIX", make_type(Series::E, 8),
        {{make_type(Series::E, 7), {1, 2, 3, 4, 5, 6, 7}}, {make_type(Series::A, 1), {0}}},
        {{labels({0, 0, 0, 0, 0, 0, 1}), labels({1})}}, "e8/e7xa1");
  if (family == "FI")
    return build_extended(
        "FI", make_type(Series::F, 4),
        {{make_type(Series::C, 3), {4, 3, 2}}, {make_type(Series::A, 1), {0}}},
        {{labels({0, 0, 1}), labels({1})}}, "f4/c3xa1");
  if (family == "FII")
    return build_extended("FII", make_type(Series::F, 4),
                          {{make_type(Series::B, 4), {0, 1, 2, 3}}}, {{labels({0, 0, 0, 1})}},
                          "f4/b4");
  if (family == "G")
    return build_extended(
        "G", make_type(Series::G, 2),
        {{make_type(Series::A, 1), {1}}, {make_type(Series::A, 1), {0}}},
        {{labels({3}), labels({1})}}, "g2/a1xa1");
  fail(errc::not_in_catalogue, "unknown family: " + family);
}

// ---------------------------------------------------------------- finalize

SymmetricPair finalize_raw(RawPair raw, const Rat& charge_scale, std::size_t cap) {
  if (raw.h.has_u1 != raw.proj.charge_row.has_value())
    fail(errc::validation_failure, "u(1) flag and charge row disagree");
  if (raw.proj.charge_row) {
    normalize_charge_row(*raw.proj.charge_row);
    if (charge_scale != 1) {
      if (charge_scale == 0) fail(errc::bad_params, "charge scale must be nonzero");
      raw.proj = raw.proj.scaled_charge(charge_scale);
    }
  }

  SymmetricPair p;
  p.family = raw.family;
  p.params = raw.params;
  p.pair_string = raw.pair_string;
  p.g = raw.g;
  p.h = raw.h;
  p.proj = raw.proj;
  p.degenerate = raw.degenerate;
  p.note = raw.note;

  const auto& grs = root_system(p.g);
  p.c_adjoint = grs.adjoint_casimir();

  // restricting the adjoint must produce adjoint(h) (+) K exactly
  HIrrepSum adj = restrict_weight(grs, p.h, p.proj, grs.highest_root(), cap);
  auto take = [&](const HIrrep& w) {
    auto it = adj.find(w);
    if (it == adj.end())
      fail(errc::validation_failure,
           "adjoint branching of " + p.pair_string + " is missing an h-adjoint piece");
    if (--it->second == 0) adj.erase(it);
  };
  for (size_t i = 0; i < p.h.factors.size(); ++i) take(h_factor_adjoint(p.h, i));
  if (p.h.has_u1) take(h_trivial(p.h));

  for (const auto& [w, m] : adj) {
    for (Int i = 0; i < m; ++i) p.k_rep.push_back(w);
  }
  std::sort(p.k_rep.begin(), p.k_rep.end(), [](const HIrrep& a, const HIrrep& b) {
    if (a.charge != b.charge) return a.charge > b.charge;
    return a.labels < b.labels;
  });

  if (p.h.has_u1) {
    if (p.k_rep.size() != 2)
      fail(errc::validation_failure, p.pair_string + ": expected two charge-conjugate K pieces");
    if (p.k_rep[0].charge == 0 || p.k_rep[0].charge != -p.k_rep[1].charge)
      fail(errc::validation_failure, p.pair_string + ": K charges are not opposite and nonzero");
    if (h_conjugate(p.h, p.k_rep[0]).labels != p.k_rep[1].labels)
      fail(errc::validation_failure, p.pair_string + ": K pieces are not conjugate");
  } else {
    if (p.k_rep.size() != 1)
      fail(errc::validation_failure, p.pair_string + ": k does not form a single h-irrep");
  }

  if (!raw.expected_k.empty()) {
    std::vector<std::vector<Weight>> got;
    for (const auto& w : p.k_rep) got.push_back(w.labels);
    auto want = raw.expected_k;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want)
      fail(errc::validation_failure, p.pair_string + ": K does not match the catalogued K");
  }
  if (raw.witness) {
    HIrrepSum br = restrict_weight(grs, p.h, p.proj, raw.witness->first, cap);
    bool found = false;
    for (const auto& [w, m] : br) found = found || w.labels == raw.witness->second;
    if (!found)
      fail(errc::validation_failure, p.pair_string + ": witness branching check failed");
  }

  for (const auto& w : p.k_rep) p.dim_k += h_dim(p.h, w);

  // c_i = c_A / (C2(h_i) + (dim k / dim h_i) C2^{h_i}(k))
  for (size_t i = 0; i < p.h.factors.size(); ++i) {
    const auto& rs = root_system(p.h.factors[i]);
    Rat c2k = rs.casimir(p.k_rep[0].labels[i]);
    if (p.k_rep.size() == 2 && rs.casimir(p.k_rep[1].labels[i]) != c2k)
      fail(errc::validation_failure, p.pair_string + ": K pieces differ in factor Casimir");
    if (c2k == 0)
      fail(errc::validation_failure, p.pair_string + ": K is trivial on a simple factor");
    Rat dim_h(type_dim(p.h.factors[i]));
    Rat denom = rs.adjoint_casimir() + Rat(p.dim_k) / dim_h * c2k;
    p.c.push_back(p.c_adjoint / denom);
  }
  if (p.h.has_u1) {
    Rat q = p.k_rep[0].charge;
    p.c_u1 = p.c_adjoint / (Rat(p.dim_k) * q * q);
  }
  return p;
}

}  // namespace

// ---------------------------------------------------------------- catalogue

const std::vector<PairFamily>& catalogue() {
  static const std::vector<PairFamily> fams = {
      {"AI", "su(N)", "so(N)", "(2l1)", 1},
      {"AII", "su(N), N=2n", "sp(N)", "(l2)", 1},
      {"AIII", "su(N)", "su(M) x su(N-M) x u1", "(l1,l_{N-M-1})+(l_{M-1},l1)", 2},
      {"BDI", "so(N)", "so(M) x so(N-M)", "(l1,l1)", 2},
      {"DIII", "so(N), N=2n", "su(n) x u1", "(l2)+(l_{n-2})", 1},
      {"CI", "sp(N), N=2n", "su(n) x u1", "(2l1)+(2l_{n-1})", 1},
      {"CII", "sp(N)", "sp(M) x sp(N-M)", "(l1,l1)", 2},
      {"EI", "e6", "c4", "(l4)", 0},
      {"EII", "e6", "a5 x a1", "(l3,1)", 0},
      {"EIII", "e6", "d5 x u1", "(l4)+(l5)", 0},
      {"EIV", "e6", "f4", "(l4)", 0},
      {"EV", "e7", "a7", "(l4)", 0},
      {"EVI", "e7", "d6 x a1", "(l5,1)", 0},
      {"EVII", "e7", "e6 x u1", "(l1)+(l6)", 0},
      {"EVIII", "e8", "d8", "(l7)", 0},
      {"EIX", "e8", "e7 x a1", "(l7,1)", 0},
      {"FI", "f4", "c3 x a1", "(l3,1)", 0},
      {"FII", "f4", "b4", "(l4)", 0},
      {"G", "g2", "a1 x a1", "(3,1)", 0},
  };
  return fams;
}

SymmetricPair instantiate(const std::string& family, const std::vector<int>& params,
                          const Rat& charge_scale, std::size_t cap) {
  RawPair raw;
  if (family == "AI") {
    if (params.size() != 1) fail(errc::bad_params, "AI takes (N)");
    raw = build_AI(params[0]);
  } else if (family == "AII") {
    if (params.size() != 1) fail(errc::bad_params, "AII takes (N)");
    raw = build_AII(params[0]);
  } else if (family == "AIII") {
    if (params.size() != 2) fail(errc::bad_params, "AIII takes (N, M)");
    raw = build_AIII(params[0], params[1]);
  } else if (family == "BDI") {
    if (params.size() != 2) fail(errc::bad_params, "BDI takes (N, M)");
    raw = build_BDI(params[0], params[1]);
  } else if (family == "CI") {
    if (params.size() != 1) fail(errc::bad_params, "CI takes (N)");
    raw = build_CI(params[0]);
  } else if (family == "CII") {
    if (params.size() != 2) fail(errc::bad_params, "CII takes (N, M)");
    raw = build_CII(params[0], params[1]);
  } else if (family == "DIII") {
    if (params.size() != 1) fail(errc::bad_params, "DIII takes (N)");
    raw = build_DIII(params[0]);
  } else {
    if (!params.empty()) fail(errc::bad_params, family + " takes no parameters");
    raw = build_fixed(family);
  }
  raw.params = params;
  return finalize_raw(std::move(raw), charge_scale, cap);
}

// ---------------------------------------------------------------- parsing

namespace {

struct HToken {
  std::string head;  // "su", "so", "sp", "u", or series letter
  int num;
};

std::vector<HToken> split_h(const std::string& s) {
  std::vector<HToken> toks;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, 'x')) {
    if (item.empty()) fail(errc::parse_error, "bad h factor in " + s);
    size_t i = 0;
    std::string head;
    while (i < item.size() && std::isalpha(static_cast<unsigned char>(item[i])))
      head += static_cast<char>(std::tolower(item[i])), ++i;
    long n = (i < item.size()) ? std::strtol(item.c_str() + i, nullptr, 10) : 0;
    toks.push_back({head, static_cast<int>(n)});
  }
  return toks;
}

int so_dim_of(const HToken& t) {
  if (t.head == "so") return t.num;
  if (t.head == "u" && t.num == 1) return 2;
  if (t.head == "b") return 2 * t.num + 1;
  if (t.head == "d") return 2 * t.num;
  if (t.head == "a" && t.num == 1) return 3;
  return -1;
}

int sp_dim_of(const HToken& t) {
  if (t.head == "sp") return t.num;
  if (t.head == "c") return 2 * t.num;
  if (t.head == "a" && t.num == 1) return 2;
  return -1;
}

int su_dim_of(const HToken& t) {
  if (t.head == "su") return t.num;
  if (t.head == "a") return t.num + 1;
  return -1;
}

}  // namespace

SymmetricPair pair_from_string(const std::string& s, const Rat& charge_scale, std::size_t cap) {
  auto slash = s.find('/');
  if (slash == std::string::npos) fail(errc::parse_error, "pair must be of the form g/h: " + s);
  LieType g = parse_type(s.substr(0, slash));
  std::string hs = s.substr(slash + 1);
  auto toks = split_h(hs);
  if (toks.empty()) fail(errc::parse_error, "empty h in " + s);
  bool u1 = false;
  std::vector<HToken> simple;
  for (const auto& t : toks) {
    if (t.head == "u" && t.num == 1)
      u1 = true;
    else
      simple.push_back(t);
  }

  // exceptional g: match the fixed catalogue
  if (g.series == Series::E || g.series == Series::F || g.series == Series::G) {
    for (const auto& fam : catalogue()) {
      if (fam.nparams != 0) continue;
      SymmetricPair p = instantiate(fam.name, {}, charge_scale, cap);
      if (p.g != g) continue;
      if (p.h.has_u1 != u1) continue;
      if (p.h.factors.size() != simple.size()) continue;
      bool ok = true;
      for (size_t i = 0; i < simple.size(); ++i) {
        LieType want = p.h.factors[i];
        const auto& t = simple[i];
        LieType got = want;
        try {
          got = parse_type(t.head + std::to_string(t.num));
        } catch (const error&) {
          ok = false;
          break;
        }
        if (got != want) ok = false;
      }
      if (ok) return p;
    }
    fail(errc::not_in_catalogue, "no catalogued pair matches " + s);
  }

  if (g.series == Series::A) {
    int N = g.rank + 1;
    if (!u1 && simple.size() == 1) {
      if (so_dim_of(simple[0]) == N && sp_dim_of(simple[0]) != N)
        return instantiate("AI", {N}, charge_scale, cap);
      if (sp_dim_of(simple[0]) == N) return instantiate("AII", {N}, charge_scale, cap);
      if (simple[0].head == "a" && simple[0].num == 1 && N == 3)
        return instantiate("AI", {3}, charge_scale, cap);
    }
    if (u1) {
      if (simple.empty() && N == 2) return instantiate("AIII", {2, 1}, charge_scale, cap);
      if (simple.size() == 1) {
        int m = su_dim_of(simple[0]);
        if (m == N - 1) return instantiate("AIII", {N, 1}, charge_scale, cap);
      }
      if (simple.size() == 2) {
        int m1 = su_dim_of(simple[0]), m2 = su_dim_of(simple[1]);
        if (m1 > 0 && m2 > 0 && m1 + m2 == N) return instantiate("AIII", {N, m1}, charge_scale, cap);
      }
    }
  }
  if (g.series == Series::B || g.series == Series::D) {
    int N = (g.series == Series::B) ? 2 * g.rank + 1 : 2 * g.rank;
    if (!u1 && simple.size() == 1) {
      int m = so_dim_of(simple[0]);
      if (m == N - 1) return instantiate("BDI", {N, 1}, charge_scale, cap);
      int msu = su_dim_of(simple[0]);
      if (g.series == Series::D && msu == g.rank) {
        // chirality-free spelling "soN/sun" without the explicit u1 is rejected
      }
    }
    if (!u1 && simple.size() == 2) {
      int m1 = so_dim_of(simple[0]), m2 = so_dim_of(simple[1]);
      if (m1 > 0 && m2 > 0 && m1 + m2 == N) return instantiate("BDI", {N, m1}, charge_scale, cap);
    }
    if (u1) {
      if (simple.size() == 1) {
        int m = so_dim_of(simple[0]);
        if (m > 0 && m + 2 == N) return instantiate("BDI", {N, 2}, charge_scale, cap);
        int msu = su_dim_of(simple[0]);
        if (g.series == Series::D && msu == g.rank)
          return instantiate("DIII", {N}, charge_scale, cap);
      }
      if (simple.empty() && N == 4) {
        // so4 is not simple; unreachable
      }
    }
  }
  if (g.series == Series::C) {
    int N = 2 * g.rank;
    if (!u1 && simple.size() == 2) {
      int m1 = sp_dim_of(simple[0]), m2 = sp_dim_of(simple[1]);
      if (m1 > 0 && m2 > 0 && m1 + m2 == N) return instantiate("CII", {N, m1}, charge_scale, cap);
    }
    if (u1 && simple.size() == 1) {
      int m = su_dim_of(simple[0]);
      if (m == g.rank) return instantiate("CI", {N}, charge_scale, cap);
    }
  }
  fail(errc::not_in_catalogue, "no catalogued pair matches " + s);
}

// ---------------------------------------------------------------- ops

Rat symmetric_space_sum(const SymmetricPair& p) {
  Rat total(0);
  for (size_t i = 0; i < p.h.factors.size(); ++i) {
    const auto& rs = root_system(p.h.factors[i]);
    Rat c2h = rs.adjoint_casimir();
    Rat c2k = rs.casimir(p.k_rep[0].labels[i]);
    Rat term = c2h / c2k + Rat(p.dim_k) / Rat(type_dim(p.h.factors[i]));
    total += 1 / term;
  }
  if (p.h.has_u1) total += Rat(1) / Rat(p.dim_k);
  return total;
}

Rat composite_casimir(const SymmetricPair& p, const HIrrep& w) {
  Rat total(0);
  for (size_t i = 0; i < p.h.factors.size(); ++i)
    total += p.c[i] * root_system(p.h.factors[i]).casimir(w.labels[i]);
  if (p.h.has_u1) total += p.c_u1 * w.charge * w.charge;
  return total;
}

HIrrepSum restrict_irrep(const SymmetricPair& p, const Weight& hw, std::size_t cap) {
  return restrict_weight(root_system(p.g), p.h, p.proj, hw, cap);
}

std::vector<std::pair<int, HIrrepSum>> restrict_parts(const SymmetricPair& p,
                                                      const std::vector<Weight>& parts,
                                                      std::size_t cap) {
  std::vector<std::pair<int, HIrrepSum>> out;
  for (size_t i = 0; i < parts.size(); ++i)
    out.emplace_back(static_cast<int>(i), restrict_irrep(p, parts[i], cap));
  return out;
}

Int k_times_contains(const SymmetricPair& p, const HIrrep& w, const HIrrep& v, std::size_t cap) {
  Int m(0);
  for (const auto& k : p.k_rep) m += h_contains(p.h, w, k, v, cap);
  return m;
}

// ---------------------------------------------------------------- file io

using json = nlohmann::ordered_json;

namespace {

json rat_json(const Rat& r) { return json::array({r.get_num().get_str(), r.get_den().get_str()}); }

Rat rat_from_json(const json& j) {
  Rat r(Int(j.at(0).get<std::string>()), Int(j.at(1).get<std::string>()));
  r.canonicalize();
  return r;
}

json irrep_json(const HIrrep& w) {
  json j;
  j["labels"] = w.labels;
  j["charge"] = rat_json(w.charge);
  return j;
}

HIrrep irrep_from_json(const json& j) {
  HIrrep w;
  w.labels = j.at("labels").get<std::vector<Weight>>();
  w.charge = rat_from_json(j.at("charge"));
  return w;
}

}  // namespace

std::string catalogue_to_json(const std::vector<SymmetricPair>& pairs) {
  json doc;
  doc["format"] = "ykm-catalogue";
  doc["version"] = 1;
  doc["pairs"] = json::array();
  for (const auto& p : pairs) {
    json j;
    j["family"] = p.family;
    j["params"] = p.params;
    j["pair"] = p.pair_string;
    j["g"] = type_name(p.g);
    json h;
    h["factors"] = json::array();
    for (const auto& f : p.h.factors) h["factors"].push_back(type_name(f));
    h["has_u1"] = p.h.has_u1;
    j["h"] = h;
    json blocks = json::array();
    for (const auto& b : p.proj.blocks) {
      json rows = json::array();
      for (const auto& row : b) {
        json r = json::array();
        for (const auto& v : row) r.push_back(rat_json(v));
        rows.push_back(r);
      }
      blocks.push_back(rows);
    }
    j["projection"] = blocks;
    if (p.proj.charge_row) {
      json r = json::array();
      for (const auto& v : *p.proj.charge_row) r.push_back(rat_json(v));
      j["charge_row"] = r;
    }
    j["k_rep"] = json::array();
    for (const auto& w : p.k_rep) j["k_rep"].push_back(irrep_json(w));
    j["degenerate"] = p.degenerate;
    if (!p.note.empty()) j["note"] = p.note;
    doc["pairs"].push_back(j);
  }
  return doc.dump(2) + "\n";
}

std::vector<SymmetricPair> catalogue_from_json(const std::string& text, std::size_t cap) {
  json doc = json::parse(text);
  if (doc.at("format") != "ykm-catalogue" || doc.at("version") != 1)
    fail(errc::parse_error, "unrecognized catalogue document");
  std::vector<SymmetricPair> out;
  for (const auto& j : doc.at("pairs")) {
    RawPair raw;
    raw.family = j.at("family").get<std::string>();
    raw.params = j.at("params").get<std::vector<int>>();
    raw.pair_string = j.at("pair").get<std::string>();
    raw.g = parse_type(j.at("g").get<std::string>());
    for (const auto& f : j.at("h").at("factors"))
      raw.h.factors.push_back(parse_type(f.get<std::string>()));
    raw.h.has_u1 = j.at("h").at("has_u1").get<bool>();
    for (const auto& b : j.at("projection")) {
      Mat rows;
      for (const auto& row : b) {
        std::vector<Rat> r;
        for (const auto& v : row) r.push_back(rat_from_json(v));
        rows.push_back(r);
      }
      raw.proj.blocks.push_back(rows);
    }
    if (j.contains("charge_row")) {
      std::vector<Rat> r;
      for (const auto& v : j.at("charge_row")) r.push_back(rat_from_json(v));
      raw.proj.charge_row = r;
    }
    if (j.contains("note")) raw.note = j.at("note").get<std::string>();
    raw.degenerate = j.at("degenerate").get<bool>();
    SymmetricPair p = finalize_raw(std::move(raw), 1, cap);
    // stored K must agree with the recomputed branching
    std::vector<HIrrep> stored;
    for (const auto& w : j.at("k_rep")) stored.push_back(irrep_from_json(w));
    if (stored != p.k_rep)
      fail(errc::validation_failure, p.pair_string + ": stored K disagrees with branching");
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<SymmetricPair> default_instances(int max_n, std::size_t cap) {
  std::vector<SymmetricPair> out;
  for (int n = 2; n <= max_n; ++n) out.push_back(instantiate("AI", {n}, 1, cap));
  for (int n = 4; n <= max_n; n += 2) out.push_back(instantiate("AII", {n}, 1, cap));
  for (int n = 2; n <= max_n; ++n)
    for (int m = 1; m <= n / 2; ++m) out.push_back(instantiate("AIII", {n, m}, 1, cap));
  for (int n = 5; n <= max_n; ++n)
    for (int m = 1; m <= n / 2; ++m) out.push_back(instantiate("BDI", {n, m}, 1, cap));
  for (int n = 4; n <= max_n; n += 2) out.push_back(instantiate("CI", {n}, 1, cap));
  for (int n = 6; n <= max_n; n += 2) out.push_back(instantiate("CII", {n, 2}, 1, cap));
  for (int n = 6; n <= max_n; n += 2) out.push_back(instantiate("DIII", {n}, 1, cap));
  for (const auto& fam : catalogue())
    if (fam.nparams == 0) out.push_back(instantiate(fam.name, {}, 1, cap));
  return out;
}

}  // namespace ykm
