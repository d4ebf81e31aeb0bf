#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ainfty/sparse_matrix.hpp"
#include "ainfty/value.hpp"

namespace ainfty {

// A pointwise finite-dimensional persistence module presented on a finite
// grid of grades: vector spaces of dims[i] at grades[i] and structure maps
// maps[i] : M(grades[i]) -> M(grades[i+1]).
struct PersistenceModule {
  std::uint32_t p = 2;
  std::vector<FiltValue> grades;
  std::vector<int> dims;        // size n
  std::vector<FpMat> maps;      // size n-1 (empty when n <= 1)

  int size() const { return static_cast<int>(grades.size()); }
  bool valid_shape() const;
};

// One interval summand [grades[i], grades[j]) with multiplicity; j absent
// means the summand survives past the last grade.
struct ModuleInterval {
  int i = 0;
  std::optional<int> j;
  int mult = 0;

  friend bool operator==(const ModuleInterval&, const ModuleInterval&) = default;
};

// Rank of the composite map M(grades[i]) -> M(grades[j]); rank_between(i, i)
// is dim M(grades[i]).
int rank_between(const PersistenceModule& m, int i, int j);

// Decomposition into interval summands by inclusion-exclusion of ranks.
// Intervals are sorted by (i, j) with finite deaths first; zero
// multiplicities are omitted.
std::vector<ModuleInterval> interval_decomposition(const PersistenceModule& m);

// Rebuild a module from interval data on the same grade grid (identity
// blocks on surviving summands). Useful as a test oracle round-trip.
PersistenceModule module_from_intervals(std::uint32_t p, const std::vector<FiltValue>& grades,
                                        const std::vector<ModuleInterval>& intervals);

}  // namespace ainfty
