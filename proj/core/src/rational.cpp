#include "ainfty/rational.hpp"

#include <cctype>

#include "ainfty/errors.hpp"

namespace ainfty {

std::optional<Rational> try_parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  if (i >= s.size()) return std::nullopt;

  auto digits = [&](size_t& j) {
    size_t start = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return s.substr(start, j - start);
  };

  std::string ip = digits(i);
  Rational q;
  if (i < s.size() && s[i] == '.') {
    ++i;
    std::string fp = digits(i);
    if (i != s.size() || (ip.empty() && fp.empty())) return std::nullopt;
    Int num = ip.empty() ? Int(0) : Int(ip);
    Int den = 1;
    for (char c : fp) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    q = Rational(num, den);
  } else if (i < s.size() && s[i] == '/') {
    ++i;
    std::string dp = digits(i);
    if (i != s.size() || ip.empty() || dp.empty()) return std::nullopt;
    Int den(dp);
    if (den == 0) return std::nullopt;
    q = Rational(Int(ip), den);
  } else {
    if (i != s.size() || ip.empty()) return std::nullopt;
    q = Rational(Int(ip));
  }
  return neg ? -q : q;
}

Rational parse_rational(const std::string& s) {
  auto q = try_parse_rational(s);
  if (!q) throw ParseError("invalid rational '" + s + "'");
  return *q;
}

std::string format_rational(const Rational& q) {
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);
  // decimal exponent needed so that den | 10^k, if den = 2^a 5^b
  Int d = den;
  int a = 0, b = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++a;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++b;
  }
  if (d != 1) return num.str() + "/" + den.str();
  int k = a > b ? a : b;
  if (k == 0) return num.str();
  Int scale = 1;
  for (int i = 0; i < k; ++i) scale *= 10;
  Int scaled = num * scale / den;  // exact by construction
  bool neg = scaled < 0;
  std::string digits = (neg ? Int(-scaled) : scaled).str();
  if (static_cast<int>(digits.size()) <= k) digits.insert(0, k + 1 - digits.size(), '0');
  digits.insert(digits.size() - k, ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return (neg ? "-" : "") + digits;
}

double rational_to_double(const Rational& q) { return q.convert_to<double>(); }

int sign_of(const Rational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative");
  if (n == 0) return 0;
  Int r = boost::multiprecision::sqrt(n);  // floor sqrt for cpp_int
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(const Rational& q, Rational* root) {
  if (q < 0) return false;
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);
  Int rn = isqrt_floor(num), rd = isqrt_floor(den);
  if (rn * rn != num || rd * rd != den) return false;
  if (root) *root = Rational(rn, rd);
  return true;
}

}  // namespace ainfty
