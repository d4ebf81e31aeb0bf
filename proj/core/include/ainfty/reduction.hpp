#pragma once

#include <optional>
#include <vector>

#include "ainfty/chain.hpp"
#include "ainfty/filtered_complex.hpp"
#include "ainfty/sparse_matrix.hpp"

namespace ainfty {

// Boundary matrix of the sublevel complex at grade t, in canonical order.
SparseMatrix boundary_matrix(const FilteredComplex& k, const FiltValue& t, std::uint32_t p);

// R = D·V column reduction of the full boundary matrix: R's nonzero
// columns have distinct lowest rows, V is upper unitriangular.
struct ReducedDecomposition {
  const FilteredComplex* complex = nullptr;
  std::uint32_t p = 2;
  SparseMatrix R, V;
  std::vector<int> pivot_col_of_row;        // -1 when the row is no pivot
  std::vector<std::pair<int, int>> pairs;   // (birth row, death column)
  std::vector<int> essentials;              // unpaired birth rows
  bool is_cycle_column(int j) const { return R.col[j].empty(); }
};

ReducedDecomposition reduce(const FilteredComplex& k, std::uint32_t p);

struct BarcodeInterval {
  FiltValue birth;
  bool death_inf = false;
  FiltValue death;      // meaningful when !death_inf
  int degree = 0;
};
using Barcode = std::vector<BarcodeInterval>;

// Classical degree-p barcode; reduced=true removes the earliest-born
// infinite degree-0 interval (the basepoint class).
Barcode classical_barcode(const ReducedDecomposition& rd, int degree, bool reduced);

// Basis of H_p(K_t): one representative cycle per class, ordered by birth.
struct HomologyBasis {
  FiltValue grade;
  int degree = 0;
  std::vector<int> birth_rows;   // canonical indices of the birth simplices
  std::vector<Chain> cycles;
  int dim() const { return static_cast<int>(birth_rows.size()); }
};

HomologyBasis homology_basis(const ReducedDecomposition& rd, const FiltValue& t, int degree);

// Coordinates of the class of cycle z (supported in K_t) in basis(t).
std::vector<std::uint32_t> express_class(const ReducedDecomposition& rd, const SparseVec& z,
                                         const FiltValue& t, const HomologyBasis& basis);

// Matrix of H_p(K_t) -> H_p(K_s), s >= t, in the homology_basis bases.
SparseMatrix induced_map(const ReducedDecomposition& rd, int degree, const FiltValue& t,
                         const FiltValue& s);

// Sublevel Betti number, straight from the decomposition.
int betti_at(const ReducedDecomposition& rd, const FiltValue& t, int degree);

SparseVec chain_to_column(const FilteredComplex& k, const Chain& c);
Chain column_to_chain(const FilteredComplex& k, const SparseVec& v, int degree, std::uint32_t p);

}  // namespace ainfty
