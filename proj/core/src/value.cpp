#include "ainfty/value.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ainfty/errors.hpp"

namespace ainfty {

std::vector<std::pair<Rational, Rational>> merge_sqrt_terms(
    std::vector<std::pair<Rational, Rational>> terms) {
  // Pull perfect-square radicands into a single rational term (radicand 1),
  // then merge terms whose radicand ratio is a perfect square: since
  // sqrt(r) = t*sqrt(g) when r/g = t^2, such terms live on a common
  // irrational axis.
  std::vector<std::pair<Rational, Rational>> merged;
  Rational constant = 0;
  for (auto& [c, r] : terms) {
    if (c == 0 || r == 0) continue;
    if (r < 0) throw std::invalid_argument("negative radicand");
    Rational root;
    if (is_perfect_square(r, &root)) {
      constant += c * root;
      continue;
    }
    bool placed = false;
    for (auto& [mc, mr] : merged) {
      Rational ratio = r / mr;
      Rational t;
      if (is_perfect_square(ratio, &t)) {
        mc += c * t;
        placed = true;
        break;
      }
    }
    if (!placed) merged.emplace_back(c, r);
  }
  std::erase_if(merged, [](const auto& t) { return t.first == 0; });
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  if (constant != 0) merged.insert(merged.begin(), {constant, Rational(1)});
  return merged;
}

int sqrt_sum_sign(const std::vector<std::pair<Rational, Rational>>& terms_in) {
  auto terms = merge_sqrt_terms(terms_in);
  if (terms.empty()) return 0;
  bool any_pos = false, any_neg = false;
  for (auto& [c, r] : terms) (c > 0 ? any_pos : any_neg) = true;
  if (!any_neg) return 1;
  if (!any_pos) return -1;
  // Mixed signs and exactly-zero ruled out by linear independence of the
  // merged radicals; narrow rational enclosures until the sign resolves.
  for (unsigned bits = 32;; bits *= 2) {
    Int two_k = Int(1) << bits;
    Rational lo_sum = 0, hi_sum = 0;
    for (auto& [c, r] : terms) {
      Int num = boost::multiprecision::numerator(r);
      Int den = boost::multiprecision::denominator(r);
      // sqrt(num/den) = sqrt(num*den)/den
      Int s = isqrt_floor(num * den * two_k * two_k);
      Rational lo(s, den * two_k), hi(s + 1, den * two_k);
      if (c >= 0) {
        lo_sum += c * lo;
        hi_sum += c * hi;
      } else {
        lo_sum += c * hi;
        hi_sum += c * lo;
      }
    }
    if (lo_sum > 0) return 1;
    if (hi_sum < 0) return -1;
    if (bits > 1u << 20) throw std::logic_error("sqrt_sum_sign failed to converge");
  }
}

FiltValue FiltValue::of_rational(const Rational& r) {
  FiltValue v;
  v.msq = r * r;
  if (r < 0) v.msq = -v.msq;
  return v;
}

FiltValue FiltValue::sqrt_of(const Rational& q) {
  if (q < 0) throw std::invalid_argument("sqrt of negative");
  FiltValue v;
  v.msq = q;
  return v;
}

FiltValue FiltValue::half() const {
  FiltValue v;
  v.msq = msq / 4;
  return v;
}

bool FiltValue::is_rational(Rational* out) const {
  Rational root;
  if (!is_perfect_square(msq < 0 ? Rational(-msq) : msq, &root)) return false;
  if (out) *out = msq < 0 ? -root : root;
  return true;
}

double FiltValue::to_double() const {
  double m = rational_to_double(msq < 0 ? Rational(-msq) : msq);
  double r = std::sqrt(m);
  return msq < 0 ? -r : r;
}

std::string FiltValue::to_string() const {
  Rational r;
  if (is_rational(&r)) return format_rational(r);
  if (msq < 0) return "-sqrt(" + format_rational(-msq) + ")";
  return "sqrt(" + format_rational(msq) + ")";
}

std::optional<FiltValue> FiltValue::parse(const std::string& s) {
  std::string t = s;
  bool neg = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = t[0] == '-';
    t = t.substr(1);
  }
  if (t.size() > 6 && t.substr(0, 5) == "sqrt(" && t.back() == ')') {
    auto q = try_parse_rational(t.substr(5, t.size() - 6));
    if (!q || *q < 0) return std::nullopt;
    FiltValue v = sqrt_of(*q);
    if (neg) v.msq = -v.msq;
    return v;
  }
  auto q = try_parse_rational(t);
  if (!q) return std::nullopt;
  return of_rational(neg ? -*q : *q);
}

int FiltValue::cmp(const FiltValue& o) const {
  int sa = sign_of(msq), sb = sign_of(o.msq);
  if (sa != sb) return sa < sb ? -1 : 1;
  if (msq == o.msq) return 0;
  // the signed-square encoding is monotone: r -> sign(r) r^2 preserves order
  return msq < o.msq ? -1 : 1;
}

namespace {
// (coef, radicand) pair for a signed surd value sign(msq)*sqrt(|msq|)
std::pair<Rational, Rational> surd_term(const FiltValue& v) {
  if (v.msq < 0) return {Rational(-1), -v.msq};
  return {Rational(1), v.msq};
}
}  // namespace

MetricValue MetricValue::of_rational(const Rational& r) {
  MetricValue v;
  if (r != 0) v.terms = {{r, Rational(1)}};
  return v;
}

MetricValue MetricValue::of_filt(const FiltValue& f) {
  MetricValue v;
  v.terms = merge_sqrt_terms({surd_term(f)});
  return v;
}

MetricValue MetricValue::diff(const FiltValue& a, const FiltValue& b) {
  auto ta = surd_term(a), tb = surd_term(b);
  tb.first = -tb.first;
  MetricValue v;
  v.terms = merge_sqrt_terms({ta, tb});
  return v;
}

int MetricValue::sign() const {
  if (infinite) return 1;
  return sqrt_sum_sign(terms);
}

MetricValue MetricValue::operator-() const {
  if (infinite) throw std::invalid_argument("negating infinity");
  MetricValue v = *this;
  for (auto& t : v.terms) t.first = -t.first;
  return v;
}

MetricValue MetricValue::abs() const {
  if (infinite) return *this;
  return sign() < 0 ? -*this : *this;
}

MetricValue MetricValue::half() const {
  if (infinite) return *this;
  MetricValue v = *this;
  for (auto& t : v.terms) t.first /= 2;
  return v;
}

int MetricValue::cmp(const MetricValue& o) const {
  if (infinite && o.infinite) return 0;
  if (infinite) return 1;
  if (o.infinite) return -1;
  auto diff = terms;
  for (auto& t : o.terms) diff.emplace_back(-t.first, t.second);
  return sqrt_sum_sign(diff);
}

bool MetricValue::is_rational(Rational* out) const {
  if (infinite) return false;
  auto m = merge_sqrt_terms(terms);
  if (m.empty()) {
    if (out) *out = 0;
    return true;
  }
  if (m.size() == 1 && m[0].second == 1) {
    if (out) *out = m[0].first;
    return true;
  }
  return false;
}

double MetricValue::to_double() const {
  if (infinite) return std::numeric_limits<double>::infinity();
  double s = 0;
  for (auto& [c, r] : terms) s += rational_to_double(c) * std::sqrt(rational_to_double(r));
  return s;
}

std::string MetricValue::to_string() const {
  if (infinite) return "inf";
  auto m = merge_sqrt_terms(terms);
  if (m.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [c, r] : m) {
    Rational ac = c < 0 ? -c : c;
    std::string piece;
    if (r == 1) {
      piece = format_rational(ac);
    } else if (ac == 1) {
      piece = "sqrt(" + format_rational(r) + ")";
    } else {
      piece = format_rational(ac) + "*sqrt(" + format_rational(r) + ")";
    }
    if (first) {
      out = (c < 0 ? "-" : "") + piece;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + piece;
    }
  }
  return out;
}

}  // namespace ainfty
