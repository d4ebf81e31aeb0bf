#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ainfty/filtered_complex.hpp"
#include "ainfty/sparse_matrix.hpp"

namespace ainfty {

// A contraction (pi, iota, phi) of the sublevel chain complex at a fixed
// grade onto its homology, with zero differential on the homology side
// (minimal). Satisfies, as exact matrix identities over F_p:
//   pi . iota = id            pi . phi  = 0
//   phi . iota = 0            phi . phi = 0
//   d.phi + phi.d = iota.pi - id
// together with pi.d = 0 and d.iota = 0.
//
// Survivor cells index the homology basis; pi columns are indexed by all
// cells of the sublevel complex and expressed in the survivor basis, iota
// columns by survivors expressed in cells, phi columns by cells expressed
// in cells (degree +1).
struct Contraction {
  const FilteredComplex* complex = nullptr;
  std::uint32_t p = 2;
  FiltValue grade;
  std::uint64_t seed = 0;
  int m = 0;  // number of cells with value <= grade

  std::vector<int> h_cells;     // surviving cell indices, ascending
  std::vector<int> h_index_of;  // size m; -1 for cancelled cells
  std::vector<SparseVec> pi;    // size m; rows are h indices
  std::vector<SparseVec> iota;  // size |H|; rows are cell indices
  std::vector<SparseVec> phi;   // size m; rows are cell indices
  std::vector<int> dims_by_degree;

  int dim() const { return static_cast<int>(h_cells.size()); }
  int h_degree(int h) const { return complex->simplex(h_cells[h]).dim(); }
  int dim_h(int degree) const;

  // Dense forms for identity checks; shapes |H| x m, m x |H|, m x m.
  FpMat pi_matrix() const;
  FpMat iota_matrix() const;
  FpMat phi_matrix() const;
  FpMat boundary_dense() const;
};

// Builds a contraction by cancelling incidence pairs of the boundary
// matrix one at a time; the seed shuffles the cancellation order (and the
// face picked inside each column), yielding genuinely different matchings
// while every output satisfies the side conditions exactly.
Contraction build_contraction(const FilteredComplex& k, const FiltValue& t, std::uint32_t p,
                              std::uint64_t seed = 0);

// A tensor word of homology basis indices.
using Word = std::vector<int>;
// Coefficients of one Delta_n: per source h index, word -> nonzero coeff.
using DeltaMap = std::vector<std::map<Word, std::uint32_t>>;

struct AInftyStructure {
  std::uint32_t p = 2;
  int n_max = 2;
  std::uint64_t seed = 0;
  FiltValue grade;
  std::vector<int> h_degree;  // degree of each basis element
  std::vector<int> dims_by_degree;
  // delta[n] holds Delta_n for 1 <= n <= n_max (delta[0] unused;
  // delta[1] stays empty: the structure is minimal).
  std::vector<DeltaMap> delta;

  int dim() const { return static_cast<int>(h_degree.size()); }
  int dim_in_degree(int degree) const;
  bool delta_is_zero(int n) const;
  // true when the word has a factor of degree 0
  bool word_touches_degree_zero(const Word& w) const;
};

// Homotopy transfer along the contraction: Delta_2 = pi^{x2} Delta iota,
// and for n >= 3 the planar-binary-tree expansion with phi on internal
// edges. Throws UnsupportedSignsError when n_max >= 3 and p != 2.
AInftyStructure transfer_delta(const Contraction& c, int n_max);

// Left-hand side of the n-th Stasheff identity
//   sum_{i=1..n} sum_{j=0..n-i} (-1)^{i+j+ij}
//     (1^{n-i-j} (x) Delta_i (x) 1^{j}) Delta_{n-i+1}
// assembled from the stored operations (Delta_m treated as zero past
// n_max). Empty maps everywhere iff SI(n) holds.
DeltaMap stasheff_residual(const AInftyStructure& a, int n);
bool delta_map_is_zero(const DeltaMap& m);

// Drops all tensor words that touch degree 0 (and clears degree-0
// sources). Safe on disconnected complexes: the transferred coproduct is
// block-diagonal over components, so this is the blockwise reduction.
AInftyStructure project_positive(const AInftyStructure& a);

// Reduced structure on positive degrees: additionally removes the
// degree-0 basis element. Throws DisconnectedError when dim H_0 != 1.
AInftyStructure reduce_to_positive_degrees(const AInftyStructure& a);

// Smallest n <= n_max with reduced Delta_n != 0, or unknown (all vanish
// up to the cap; finite data cannot certify +infinity).
struct KReport {
  std::optional<int> k;
  int n_max = 2;
  std::string to_string() const;
  friend bool operator==(const KReport&, const KReport&) = default;
};
KReport k_invariant(const AInftyStructure& a);

}  // namespace ainfty
