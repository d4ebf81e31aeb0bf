#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ainfty/filtered_complex.hpp"
#include "ainfty/kappa.hpp"
#include "ainfty/rational.hpp"
#include "ainfty/value.hpp"

namespace ainfty {

// A finite metric input: exact rational coordinates, or an exact pairwise
// distance matrix when no embedding is available.
struct PointCloud {
  std::vector<std::vector<Rational>> coords;  // coordinate mode
  std::vector<std::vector<FiltValue>> dist;   // matrix mode

  static PointCloud from_coords(std::vector<std::vector<Rational>> coords);
  // checks squareness, zero diagonal, symmetry, nonnegativity and spot
  // checks the triangle inequality; throws ValidationError
  static PointCloud from_matrix(std::vector<std::vector<FiltValue>> dist);

  int size() const;
  bool has_coords() const { return dist.empty(); }
  int ambient_dim() const { return coords.empty() ? 0 : static_cast<int>(coords[0].size()); }

  Rational sq_distance(int i, int j) const;  // coordinate mode only
  FiltValue distance(int i, int j) const;
};

// One point per line, coordinates separated by commas and/or whitespace;
// '#' starts a comment. Entries are exact rationals ("0.25", "22/7", "-3").
PointCloud parse_point_cloud(const std::string& text);
PointCloud load_point_cloud(const std::string& path);

// Square matrix in the same token format; entries may also be square-root
// values like "sqrt(2)".
PointCloud parse_distance_matrix(const std::string& text);
PointCloud load_distance_matrix(const std::string& path);

// Vietoris-Rips filtration at radius scale: a simplex enters at half its
// diameter. Keeps simplices of dimension <= max_dim and value <= max_r.
FilteredComplex rips_filtration(const PointCloud& pc, int max_dim, const FiltValue& max_r);

// Cech filtration: a simplex enters at the radius of the smallest ball
// enclosing its vertices (exact). Coordinate mode only.
FilteredComplex cech_filtration(const PointCloud& pc, int max_dim, const FiltValue& max_r);

// Exact squared radius of the minimal enclosing ball of a point set.
Rational miniball_sq_radius(const std::vector<std::vector<Rational>>& pts);

// Lower-star filtration of the complex under a vertex function: each
// simplex enters at the max of f over its vertices. Every vertex of k
// must have a value; throws ValidationError otherwise.
FilteredComplex lower_star(const FilteredComplex& k, const std::map<int, Rational>& f);

// v scaled by a nonnegative integer factor.
FiltValue filt_scale(const FiltValue& v, int factor);

struct InferOptions {
  int n = 2;
  int degree = 1;
  std::uint32_t field = 2;
  bool use_rips = false;                // default is the Cech filtration
  std::optional<int> max_dim;           // default degree + 1
  std::optional<FiltValue> max_r;       // default 4 * epsilon
  std::uint64_t seed = 0;
};

struct InferResult {
  int count = 0;        // features alive across the whole window
  FiltValue window_lo;  // epsilon
  FiltValue window_hi;  // 3 * epsilon
  std::vector<TopNCertificate> certificates;
};

// Counts features of kappa_{n,degree} that persist from scale epsilon to
// 3*epsilon in the chosen filtration of the cloud.
InferResult infer_features(const PointCloud& pc, const FiltValue& epsilon,
                           const InferOptions& opt = {});

}  // namespace ainfty
