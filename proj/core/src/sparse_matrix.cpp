#include "ainfty/sparse_matrix.hpp"

#include <algorithm>

namespace ainfty {

void axpy(SparseVec& dst, const SparseVec& src, std::uint32_t c, std::uint32_t p) {
  if (c % p == 0) return;
  SparseVec out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      std::uint32_t v = static_cast<std::uint32_t>(std::uint64_t(src[j].second) * c % p);
      if (v) out.emplace_back(src[j].first, v);
      ++j;
    } else {
      std::uint32_t v = static_cast<std::uint32_t>(
          (dst[i].second + std::uint64_t(src[j].second) * c) % p);
      if (v) out.emplace_back(dst[i].first, v);
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

SparseVec scaled(const SparseVec& src, std::uint32_t c, std::uint32_t p) {
  SparseVec out;
  c %= p;
  if (!c) return out;
  out.reserve(src.size());
  for (auto& [r, v] : src) {
    std::uint32_t w = static_cast<std::uint32_t>(std::uint64_t(v) * c % p);
    if (w) out.emplace_back(r, w);
  }
  return out;
}

std::uint32_t vec_coeff(const SparseVec& v, int row) {
  auto it = std::lower_bound(v.begin(), v.end(), row,
                             [](const auto& e, int r) { return e.first < r; });
  if (it == v.end() || it->first != row) return 0;
  return it->second;
}

SparseMatrix SparseMatrix::identity(int n, std::uint32_t p) {
  SparseMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.col[i] = {{i, 1 % p}};
  return m;
}

std::optional<std::pair<int, std::uint32_t>> SparseMatrix::lowest(int j) const {
  if (col[j].empty()) return std::nullopt;
  return col[j].back();
}

SparseMatrix sparse_mul(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows, b.cols, a.p);
  for (int j = 0; j < b.cols; ++j) {
    SparseVec acc;
    for (auto& [k, c] : b.col[j]) axpy(acc, a.col[k], c, a.p);
    out.col[j] = std::move(acc);
  }
  return out;
}

FpMat FpMat::identity(int n, std::uint32_t p) {
  FpMat m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

FpMat FpMat::from_sparse(const SparseMatrix& m) {
  FpMat out(m.rows, m.cols, m.p);
  for (int j = 0; j < m.cols; ++j)
    for (auto& [r, v] : m.col[j]) out.at(r, j) = v;
  return out;
}

SparseMatrix FpMat::to_sparse() const {
  SparseMatrix out(rows, cols, p);
  for (int j = 0; j < cols; ++j)
    for (int r = 0; r < rows; ++r)
      if (at(r, j)) out.col[j].emplace_back(r, at(r, j));
  return out;
}

FpMat FpMat::mul(const FpMat& o) const {
  FpMat out(rows, o.cols, p);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      std::uint64_t f = at(i, k);
      if (!f) continue;
      for (int j = 0; j < o.cols; ++j)
        out.at(i, j) = static_cast<std::uint32_t>((out.at(i, j) + f * o.at(k, j)) % p);
    }
  return out;
}

bool FpMat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t v) { return v == 0; });
}

bool FpMat::is_identity() const {
  if (rows != cols) return false;
  return *this == identity(rows, p);
}

namespace {
// row-reduce in place; returns pivot column of each reduced row
std::vector<int> row_reduce(FpMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < m.cols && row < m.rows; ++c) {
    int piv = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, c)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int cc = 0; cc < m.cols; ++cc) std::swap(m.at(piv, cc), m.at(row, cc));
    std::uint64_t inv = mod_inverse(m.at(row, c), m.p);
    for (int cc = 0; cc < m.cols; ++cc)
      m.at(row, cc) = static_cast<std::uint32_t>(m.at(row, cc) * inv % m.p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || !m.at(r, c)) continue;
      std::uint64_t f = m.at(r, c);
      for (int cc = 0; cc < m.cols; ++cc)
        m.at(r, cc) = static_cast<std::uint32_t>(
            (m.at(r, cc) + (m.p - std::uint32_t(f * m.at(row, cc) % m.p))) % m.p);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}
}  // namespace

int FpMat::rank() const {
  FpMat m = *this;
  return static_cast<int>(row_reduce(m).size());
}

FpMat FpMat::kernel_basis() const {
  FpMat m = *this;
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  int free_count = cols - static_cast<int>(pivots.size());
  FpMat out(cols, free_count, p);
  int k = 0;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    out.at(c, k) = 1 % p;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      std::uint32_t v = m.at(static_cast<int>(r), c);
      if (v) out.at(pivots[r], k) = p - v;
    }
    ++k;
  }
  return out;
}

std::optional<FpMat> FpMat::solve(const FpMat& B) const {
  // eliminate on [A | B]
  FpMat aug(rows, cols + B.cols, p);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) aug.at(r, c) = at(r, c);
    for (int c = 0; c < B.cols; ++c) aug.at(r, cols + c) = B.at(r, c);
  }
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int piv = -1;
    for (int r = row; r < rows; ++r)
      if (aug.at(r, c)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int cc = 0; cc < aug.cols; ++cc) std::swap(aug.at(piv, cc), aug.at(row, cc));
    std::uint64_t inv = mod_inverse(aug.at(row, c), p);
    for (int cc = 0; cc < aug.cols; ++cc)
      aug.at(row, cc) = static_cast<std::uint32_t>(aug.at(row, cc) * inv % p);
    for (int r = 0; r < rows; ++r) {
      if (r == row || !aug.at(r, c)) continue;
      std::uint64_t f = aug.at(r, c);
      for (int cc = 0; cc < aug.cols; ++cc)
        aug.at(r, cc) = static_cast<std::uint32_t>(
            (aug.at(r, cc) + (p - std::uint32_t(f * aug.at(row, cc) % p))) % p);
    }
    pivots.push_back(c);
    ++row;
  }
  // inconsistent if a zero row of A has nonzero B part
  for (int r = row; r < rows; ++r)
    for (int c = 0; c < B.cols; ++c)
      if (aug.at(r, cols + c)) return std::nullopt;
  FpMat X(cols, B.cols, p);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (int c = 0; c < B.cols; ++c) X.at(pivots[r], c) = aug.at(static_cast<int>(r), cols + c);
  return X;
}

}  // namespace ainfty
