#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ainfty/rational.hpp"

namespace ainfty {

// Exact sign of sum_i c_i * sqrt(r_i) with c_i rational, r_i >= 0 rational.
// Terms whose radicands differ by a square rational factor are merged
// exactly; square roots with distinct squarefree parts are linearly
// independent over Q, so the merged form is zero iff every coefficient is.
// Nonzero sums are resolved by rational interval enclosures of increasing
// precision. Fully exact, no floating point.
int sqrt_sum_sign(const std::vector<std::pair<Rational, Rational>>& terms);

// A filtration value / barcode endpoint: sign(msq) * sqrt(|msq|).
// Rationals embed via r -> sign(r) * r^2; Euclidean constructions (Rips,
// Cech) produce genuine square roots. Totally ordered, exactly.
struct FiltValue {
  Rational msq;  // signed square

  FiltValue() = default;

  static FiltValue of_rational(const Rational& r);
  static FiltValue of_int(long long v) { return of_rational(Rational(v)); }
  // sqrt(q), q >= 0
  static FiltValue sqrt_of(const Rational& q);

  FiltValue half() const;  // value / 2
  bool is_rational(Rational* out = nullptr) const;
  double to_double() const;
  // Exact round-trip text: "0.25", "22/7", "sqrt(4/3)", "-sqrt(2)".
  std::string to_string() const;
  static std::optional<FiltValue> parse(const std::string& s);

  int cmp(const FiltValue& o) const;
  bool operator==(const FiltValue& o) const { return cmp(o) == 0; }
  std::strong_ordering operator<=>(const FiltValue& o) const {
    int c = cmp(o);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

// A metric-layer scalar: +infinity or a finite sum of signed square roots
// of rationals. Closed under the operations the bottleneck / Hausdorff /
// interleaving computations perform: differences of filtration values,
// halving, absolute value, max. Comparisons are exact.
struct MetricValue {
  bool infinite = false;
  std::vector<std::pair<Rational, Rational>> terms;  // (coef, radicand >= 0), merged form

  static MetricValue zero() { return MetricValue{}; }
  static MetricValue inf() {
    MetricValue v;
    v.infinite = true;
    return v;
  }
  static MetricValue of_rational(const Rational& r);
  static MetricValue of_filt(const FiltValue& v);
  // a - b
  static MetricValue diff(const FiltValue& a, const FiltValue& b);

  MetricValue abs() const;
  MetricValue half() const;
  MetricValue operator-() const;

  int sign() const;  // finite only
  int cmp(const MetricValue& o) const;
  bool operator==(const MetricValue& o) const { return cmp(o) == 0; }
  std::strong_ordering operator<=>(const MetricValue& o) const {
    int c = cmp(o);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  static MetricValue max(const MetricValue& a, const MetricValue& b) { return a < b ? b : a; }

  bool is_rational(Rational* out = nullptr) const;
  double to_double() const;
  // Exact expression, e.g. "1", "sqrt(2) - 1", "inf".
  std::string to_string() const;
};

// Normalizes a term list into merged form (shared squarefree parts
// combined, zero terms dropped, deterministic order).
std::vector<std::pair<Rational, Rational>> merge_sqrt_terms(
    std::vector<std::pair<Rational, Rational>> terms);

}  // namespace ainfty
