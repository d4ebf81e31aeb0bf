// Independent reference implementations used only by the test suites.
// Everything here is deliberately naive (dense arithmetic, exhaustive
// search) and shares no algorithmic code with the library: these are the
// oracles the fast paths are checked against.
#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "ainfty/rational.hpp"
#include "ainfty/value.hpp"

namespace oracle {

using ainfty::Rational;
using big_float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<160>>;

// ---- floating-point reference for radical sums -------------------------

inline big_float eval_sqrt_sum(const std::vector<std::pair<Rational, Rational>>& terms) {
  big_float s = 0;
  for (auto& [c, r] : terms)
    s += big_float(c) * sqrt(big_float(r));
  return s;
}

// ---- dense linear algebra over F_p --------------------------------------

struct DenseFp {
  int rows = 0, cols = 0;
  std::uint32_t p = 2;
  std::vector<std::uint32_t> a;  // row-major

  DenseFp() = default;
  DenseFp(int r, int c, std::uint32_t p_) : rows(r), cols(c), p(p_), a(size_t(r) * c, 0) {}
  std::uint32_t& at(int r, int c) { return a[size_t(r) * cols + c]; }
  std::uint32_t at(int r, int c) const { return a[size_t(r) * cols + c]; }
};

inline std::uint32_t fp_inv(std::uint32_t x, std::uint32_t p) {
  // Fermat
  std::uint64_t base = x % p, acc = 1;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return std::uint32_t(acc);
}

inline int dense_rank(DenseFp m) {
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int cc = 0; cc < m.cols; ++cc) std::swap(m.at(piv, cc), m.at(rank, cc));
    std::uint64_t inv = fp_inv(m.at(rank, c), m.p);
    for (int cc = 0; cc < m.cols; ++cc) m.at(rank, cc) = std::uint32_t(m.at(rank, cc) * inv % m.p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, c) == 0) continue;
      std::uint64_t f = m.at(r, c);
      for (int cc = 0; cc < m.cols; ++cc)
        m.at(r, cc) = std::uint32_t((m.at(r, cc) + (m.p - std::uint32_t(f * m.at(rank, cc) % m.p))) % m.p);
    }
    ++rank;
  }
  return rank;
}

inline DenseFp dense_mul(const DenseFp& A, const DenseFp& B) {
  DenseFp C(A.rows, B.cols, A.p);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      std::uint64_t f = A.at(i, k);
      if (!f) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = std::uint32_t((C.at(i, j) + f * B.at(k, j)) % A.p);
    }
  return C;
}

// ---- persistence-module barcode by brute force --------------------------

struct DenseModule {
  std::uint32_t p;
  std::vector<int> dims;          // per grade
  std::vector<DenseFp> maps;      // maps[i]: dims[i+1] x dims[i]
};

// rank of the composite grades[i] -> grades[j]
inline int module_rank(const DenseModule& M, int i, int j) {
  if (i == j) return M.dims[i];
  DenseFp acc = M.maps[i];
  for (int k = i + 1; k < j; ++k) acc = dense_mul(M.maps[k], acc);
  return dense_rank(acc);
}

struct OracleBar {
  int birth;                 // grade index
  std::optional<int> death;  // grade index, nullopt = infinite
  int mult;
};

// Interval multiplicities recovered straight from the rank function.
inline std::vector<OracleBar> module_barcode_oracle(const DenseModule& M) {
  int k = int(M.dims.size());
  auto r = [&](int i, int j) -> int {
    if (i < 0 || j >= k || j < i) return 0;
    return module_rank(M, i, j);
  };
  std::vector<OracleBar> out;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      int m = (r(i, j - 1) - r(i, j)) - (r(i - 1, j - 1) - r(i - 1, j));
      if (m > 0) out.push_back({i, j, m});
    }
    int m_inf = r(i, k - 1) - r(i - 1, k - 1);
    if (m_inf > 0) out.push_back({i, std::nullopt, m_inf});
  }
  return out;
}

// ---- bottleneck distance by exhaustive matching --------------------------

struct OraclePoint {
  ainfty::FiltValue birth;
  bool death_inf = false;
  ainfty::FiltValue death;
};

inline ainfty::MetricValue oracle_pair_cost(const OraclePoint& x, const OraclePoint& y) {
  using ainfty::MetricValue;
  MetricValue db = MetricValue::diff(x.birth, y.birth).abs();
  MetricValue dd;
  if (x.death_inf && y.death_inf)
    dd = MetricValue::zero();
  else if (x.death_inf || y.death_inf)
    dd = MetricValue::inf();
  else
    dd = MetricValue::diff(x.death, y.death).abs();
  return MetricValue::max(db, dd);
}

inline ainfty::MetricValue oracle_diag_cost(const OraclePoint& x) {
  using ainfty::MetricValue;
  if (x.death_inf) return MetricValue::inf();
  return MetricValue::diff(x.death, x.birth).abs().half();
}

// Minimize over all partial injections D1 -> D2 of
// max(matched pair costs, diagonal costs of everything unmatched).
inline ainfty::MetricValue oracle_bottleneck(const std::vector<OraclePoint>& d1,
                                             const std::vector<OraclePoint>& d2) {
  using ainfty::MetricValue;
  int n1 = int(d1.size()), n2 = int(d2.size());
  MetricValue best = MetricValue::inf();
  std::vector<int> assign(n1, -1);  // image in d2, or -1 for diagonal
  std::vector<bool> used(n2, false);

  auto cost_of_assignment = [&]() {
    MetricValue m = MetricValue::zero();
    for (int i = 0; i < n1; ++i)
      m = MetricValue::max(m, assign[i] < 0 ? oracle_diag_cost(d1[i])
                                            : oracle_pair_cost(d1[i], d2[assign[i]]));
    for (int j = 0; j < n2; ++j)
      if (!used[j]) m = MetricValue::max(m, oracle_diag_cost(d2[j]));
    return m;
  };

  auto rec = [&](auto&& self, int i) -> void {
    if (i == n1) {
      MetricValue c = cost_of_assignment();
      if (c < best) best = c;
      return;
    }
    assign[i] = -1;
    self(self, i + 1);
    for (int j = 0; j < n2; ++j) {
      if (used[j]) continue;
      used[j] = true;
      assign[i] = j;
      self(self, i + 1);
      used[j] = false;
    }
    assign[i] = -1;
  };
  rec(rec, 0);
  return best;
}

// ---- exact smallest enclosing ball by exhaustive support sets ------------

// Solves the square rational system A x = b by Gaussian elimination;
// nullopt if singular/inconsistent.
inline std::optional<std::vector<Rational>> rational_solve(std::vector<std::vector<Rational>> A,
                                                           std::vector<Rational> b) {
  int n = int(A.size());
  int m = n ? int(A[0].size()) : 0;
  std::vector<int> where(m, -1);
  int row = 0;
  for (int c = 0; c < m && row < n; ++c) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (A[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[piv], A[row]);
    std::swap(b[piv], b[row]);
    Rational inv = A[row][c];
    for (auto& x : A[row]) x /= inv;
    b[row] /= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || A[r][c] == 0) continue;
      Rational f = A[r][c];
      for (int cc = 0; cc < m; ++cc) A[r][cc] -= f * A[row][cc];
      b[r] -= f * b[row];
    }
    where[c] = row++;
  }
  for (int r = row; r < n; ++r)
    if (b[r] != 0) return std::nullopt;
  std::vector<Rational> x(m, 0);
  for (int c = 0; c < m; ++c)
    if (where[c] >= 0) x[c] = b[where[c]];
  // verify (guards the free-variable case)
  // caller only uses this when a unique/consistent solution is expected
  return x;
}

inline Rational sq_norm(const std::vector<Rational>& v) {
  Rational s = 0;
  for (auto& x : v) s += x * x;
  return s;
}

// Center (if any) equidistant from all pts, lying in their affine hull.
inline std::optional<std::pair<std::vector<Rational>, Rational>> circumball(
    const std::vector<std::vector<Rational>>& pts) {
  int k = int(pts.size());
  if (k == 0) return std::nullopt;
  int d = int(pts[0].size());
  // center = p0 + sum_i x_i (p_i - p0); equidistance gives a linear system
  // in x via Gram matrix.
  std::vector<std::vector<Rational>> diffs;
  for (int i = 1; i < k; ++i) {
    std::vector<Rational> v(d);
    for (int c = 0; c < d; ++c) v[c] = pts[i][c] - pts[0][c];
    diffs.push_back(v);
  }
  int m = k - 1;
  std::vector<std::vector<Rational>> G(m, std::vector<Rational>(m, 0));
  std::vector<Rational> rhs(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Rational dot = 0;
      for (int c = 0; c < d; ++c) dot += diffs[i][c] * diffs[j][c];
      G[i][j] = dot;
    }
    rhs[i] = sq_norm(diffs[i]) / 2;
  }
  auto x = rational_solve(G, rhs);
  if (!x) return std::nullopt;
  std::vector<Rational> center = pts[0];
  for (int i = 0; i < m; ++i)
    for (int c = 0; c < d; ++c) center[c] += (*x)[i] * diffs[i][c];
  // verify equidistance (rejects inconsistent over/under-determined cases)
  std::vector<Rational> diff0(d);
  for (int c = 0; c < d; ++c) diff0[c] = center[c] - pts[0][c];
  Rational r2 = sq_norm(diff0);
  for (int i = 1; i < k; ++i) {
    std::vector<Rational> di(d);
    for (int c = 0; c < d; ++c) di[c] = center[c] - pts[i][c];
    if (sq_norm(di) != r2) return std::nullopt;
  }
  return std::make_pair(center, r2);
}

// Exhaustive exact miniball: minimum squared radius over circumballs of all
// nonempty subsets that enclose every point.
inline Rational oracle_miniball_sq(const std::vector<std::vector<Rational>>& pts) {
  int n = int(pts.size());
  if (n == 0) throw std::invalid_argument("empty");
  int d = int(pts[0].size());
  std::optional<Rational> best;
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  int max_k = std::min(n, d + 1);
  std::vector<int> comb;
  auto consider = [&](const std::vector<int>& sel) {
    std::vector<std::vector<Rational>> sub;
    for (int i : sel) sub.push_back(pts[i]);
    auto ball = circumball(sub);
    if (!ball) return;
    auto& [center, r2] = *ball;
    for (auto& pt : pts) {
      std::vector<Rational> diff(d);
      for (int c = 0; c < d; ++c) diff[c] = center[c] - pt[c];
      if (sq_norm(diff) > r2) return;
    }
    if (!best || r2 < *best) best = r2;
  };
  auto rec = [&](auto&& self, int start, int k) -> void {
    if (int(comb.size()) == k) {
      consider(comb);
      return;
    }
    for (int i = start; i < n; ++i) {
      comb.push_back(i);
      self(self, i + 1, k);
      comb.pop_back();
    }
  };
  for (int k = 1; k <= max_k; ++k) rec(rec, 0, k);
  if (!best) throw std::logic_error("oracle miniball failed");
  return *best;
}

}  // namespace oracle
