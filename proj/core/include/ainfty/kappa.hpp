#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ainfty/persistence_module.hpp"
#include "ainfty/reduction.hpp"
#include "ainfty/transfer.hpp"

namespace ainfty {

// Outcome of verifying that all reduced coproducts below level n vanish at
// one grade. n = 2 is vacuously verified.
struct TopNCertificate {
  FiltValue grade;
  int n = 2;
  bool ok = true;
  int failing_m = -1;
  int witness_degree = -1;
  std::string witness;
};

TopNCertificate check_top_n(const AInftyStructure& a, int n);
TopNCertificate check_top_n(const FilteredComplex& k, const FiltValue& t, int n,
                            std::uint32_t field = 2, std::uint64_t seed = 0);

// Kernel of the reduced Delta_n restricted to degree-`degree` sources;
// columns are kernel vectors in the structure's degree-`degree` basis.
FpMat kappa_kernel(const AInftyStructure& a, int n, int degree);

/// kappa at one grade: kernel basis plus the survivor cells that index it.
struct KappaBasis {
  FiltValue grade;
  int n = 2;
  int degree = 0;
  std::vector<int> h_cells;  // degree-`degree` survivor cells of the contraction
  FpMat kernel;
  int dim() const { return kernel.cols; }
};
KappaBasis kappa_at(const FilteredComplex& k, const FiltValue& t, int n, int degree,
                    std::uint32_t field = 2, std::uint64_t seed = 0);

// The kappa persistence module over the homological critical grades, with
// transition maps given by the inclusion-induced maps restricted to
// kernels. Throws TopNViolationError when a grade fails the vanishing
// hypothesis (n >= 3) and ContainmentFailureError if a kernel image
// escapes the next kernel.
struct KappaModule {
  PersistenceModule module;
  int n = 2;
  int degree = 0;
  std::uint32_t field = 2;
  std::uint64_t seed = 0;
  bool top_n_verified = false;
  std::vector<TopNCertificate> certificates;  // one per grade when n >= 3
};
KappaModule kappa_module(const FilteredComplex& k, int n, int degree, std::uint32_t field = 2,
                         std::uint64_t seed = 0);

// Interval decomposition rendered with grade endpoints.
Barcode module_barcode(const PersistenceModule& m, int degree);
Barcode kappa_barcode(const KappaModule& km);

// Grades where the kappa module's local transition fails to be an
// isomorphism, plus the smallest positive one (the feature size).
struct DeltaCritical {
  std::vector<FiltValue> values;
  std::optional<FiltValue> feature_size;
};
DeltaCritical delta_critical_values(const KappaModule& km);

// Pooled classical bar endpoints over all degrees: outside these grades
// every inclusion-induced map on homology is an isomorphism.
std::vector<FiltValue> homological_critical_values(const ReducedDecomposition& rd);

// Rank of kappa(t) -> kappa(s) (t <= s); verifies the vanishing
// hypothesis at both grades when n >= 3 and appends certificates.
int kappa_rank_between(const FilteredComplex& k, const ReducedDecomposition& rd, int n, int degree,
                       const FiltValue& t, const FiltValue& s, std::uint32_t field,
                       std::uint64_t seed, std::vector<TopNCertificate>* certs = nullptr);

}  // namespace ainfty
