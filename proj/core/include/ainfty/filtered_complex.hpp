#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ainfty/simplex.hpp"
#include "ainfty/value.hpp"

namespace ainfty {

struct ValidationIssue {
  enum Kind { NotClosed, NonMonotone } kind;
  int simplex_index;      // offender (canonical index)
  std::string simplex;    // text of the offending simplex
  std::string detail;     // missing/late face
  std::string to_string() const;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

// A finite filtered simplicial complex in canonical order:
// (value, dimension, lexicographic vertices). Immutable once built.
class FilteredComplex {
 public:
  FilteredComplex() = default;

  // Sorts canonically. With check=true throws NotClosedError /
  // NonMonotoneError on the first violation.
  static FilteredComplex from_pairs(std::vector<std::pair<Simplex, FiltValue>> pairs,
                                    bool check = true);

  // Text format: one simplex per line, "<value> <v0> <v1> ... <vk>",
  // '#' starts a comment. Values are decimal rationals, fractions, or
  // exact square-root tokens like "sqrt(4/3)".
  static FilteredComplex parse_text(const std::string& text);
  static FilteredComplex load(const std::string& path);
  std::string to_text() const;

  int size() const { return static_cast<int>(simplices_.size()); }
  int top_dim() const;
  const Simplex& simplex(int i) const { return simplices_[i]; }
  const FiltValue& value(int i) const { return values_[i]; }
  std::optional<int> index_of(const Simplex& s) const;

  // number of simplices with value <= t (a canonical-order prefix)
  int prefix_size_at(const FiltValue& t) const;
  // distinct filtration values, ascending
  std::vector<FiltValue> grades() const;

  // full closure + monotonicity report (collects all violations)
  ValidationReport validate() const;

  // connected components among vertices present at grade t, by edges
  // present at grade t; returns component id per vertex index present
  int num_components_at(const FiltValue& t) const;
  // component id of each simplex at grade t (by its first vertex)
  std::vector<int> component_of_simplex_at(const FiltValue& t) const;

 private:
  std::vector<Simplex> simplices_;
  std::vector<FiltValue> values_;
  std::map<Simplex, int> index_;
};

}  // namespace ainfty
