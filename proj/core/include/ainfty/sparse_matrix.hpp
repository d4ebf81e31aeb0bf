#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ainfty/field.hpp"

namespace ainfty {

// A sparse column: (row, coefficient) entries sorted by row, coefficients
// nonzero mod p.
using SparseVec = std::vector<std::pair<int, std::uint32_t>>;

// dst += c * src (mod p)
void axpy(SparseVec& dst, const SparseVec& src, std::uint32_t c, std::uint32_t p);
SparseVec scaled(const SparseVec& src, std::uint32_t c, std::uint32_t p);
std::uint32_t vec_coeff(const SparseVec& v, int row);

// Column-major sparse matrix over F_p.
struct SparseMatrix {
  int rows = 0, cols = 0;
  std::uint32_t p = 2;
  std::vector<SparseVec> col;

  SparseMatrix() = default;
  SparseMatrix(int r, int c, std::uint32_t p_) : rows(r), cols(c), p(p_), col(c) {}
  static SparseMatrix identity(int n, std::uint32_t p);

  std::uint32_t get(int r, int c) const { return vec_coeff(col[c], r); }
  // largest-index nonzero row of column j, if any
  std::optional<std::pair<int, std::uint32_t>> lowest(int j) const;
  bool operator==(const SparseMatrix&) const = default;
};

SparseMatrix sparse_mul(const SparseMatrix& a, const SparseMatrix& b);

// Dense matrix over F_p for the small linear algebra (module maps,
// kernels, change of basis).
struct FpMat {
  int rows = 0, cols = 0;
  std::uint32_t p = 2;
  std::vector<std::uint32_t> a;  // row-major

  FpMat() = default;
  FpMat(int r, int c, std::uint32_t p_) : rows(r), cols(c), p(p_), a(std::size_t(r) * c, 0) {}
  static FpMat identity(int n, std::uint32_t p);
  static FpMat from_sparse(const SparseMatrix& m);
  SparseMatrix to_sparse() const;

  std::uint32_t& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
  std::uint32_t at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

  FpMat mul(const FpMat& o) const;
  int rank() const;
  bool is_zero() const;
  bool is_identity() const;
  // columns form a basis of the kernel
  FpMat kernel_basis() const;
  // solves this * X = B; nullopt if inconsistent
  std::optional<FpMat> solve(const FpMat& B) const;
  bool operator==(const FpMat&) const = default;
};

}  // namespace ainfty
