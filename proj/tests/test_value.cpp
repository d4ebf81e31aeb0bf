#include <doctest.h>

#include <random>

#include "ainfty/rational.hpp"
#include "ainfty/value.hpp"
#include "oracles.hpp"

using namespace ainfty;

TEST_CASE("rational parse and format round-trip") {
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK(parse_rational("22/7") == Rational(22, 7));
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(format_rational(Rational(1, 4)) == "0.25");
  CHECK(format_rational(Rational(-3, 2)) == "-1.5");
  CHECK(format_rational(Rational(1, 3)) == "1/3");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(format_rational(Rational(34, 5)) == "6.8");
  CHECK(!try_parse_rational("1.2.3"));
  CHECK(!try_parse_rational(""));
  CHECK(!try_parse_rational("a"));
  CHECK(!try_parse_rational("1/0"));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    Rational q(int64_t(rng() % 20001) - 10000, int64_t(rng() % 999) + 1);
    CHECK(parse_rational(format_rational(q)) == q);
  }
}

TEST_CASE("perfect squares and integer square roots") {
  CHECK(isqrt_floor(Int(0)) == 0);
  CHECK(isqrt_floor(Int(15)) == 3);
  CHECK(isqrt_floor(Int(16)) == 4);
  Rational root;
  CHECK(is_perfect_square(Rational(9, 16), &root));
  CHECK(root == Rational(3, 4));
  CHECK(!is_perfect_square(Rational(2)));
  CHECK(!is_perfect_square(Rational(8)));
  CHECK(is_perfect_square(Rational(0), &root));
  CHECK(root == 0);
}

TEST_CASE("sqrt_sum_sign agrees with high-precision evaluation") {
  std::mt19937_64 rng(11);
  auto rnd_rat = [&](bool nonneg) {
    Rational q(int64_t(rng() % 41) - (nonneg ? 0 : 20), int64_t(rng() % 12) + 1);
    if (nonneg && q < 0) q = -q;
    return q;
  };
  for (int trial = 0; trial < 1500; ++trial) {
    int k = 1 + int(rng() % 4);
    std::vector<std::pair<Rational, Rational>> terms;
    for (int i = 0; i < k; ++i) terms.emplace_back(rnd_rat(false), rnd_rat(true));
    int got = sqrt_sum_sign(terms);
    auto ref = oracle::eval_sqrt_sum(terms);
    if (ref > 1e-30)
      CHECK(got == 1);
    else if (ref < -1e-30)
      CHECK(got == -1);
    else
      CHECK(got == 0);
  }
}

TEST_CASE("sqrt_sum_sign exact zeros across square-ratio classes") {
  // sqrt(2) + sqrt(8) - sqrt(18) = 0
  CHECK(sqrt_sum_sign({{1, 2}, {1, 8}, {-1, 18}}) == 0);
  // sqrt(2) + sqrt(8) - sqrt(18) + tiny > 0
  CHECK(sqrt_sum_sign({{1, 2}, {1, 8}, {-1, 18}, {Rational(1, 1000000), 1}}) == 1);
  CHECK(sqrt_sum_sign({{1, 2}, {1, 8}, {-1, 18}, {Rational(-1, 1000000), 1}}) == -1);
  // sqrt(4/9) = 2/3
  CHECK(sqrt_sum_sign({{1, Rational(4, 9)}, {Rational(-2, 3), 1}}) == 0);
  CHECK(sqrt_sum_sign({}) == 0);
  // close call: sqrt(101) - sqrt(100) - 1/20 vs exact
  CHECK(sqrt_sum_sign({{1, 101}, {-1, 100}, {Rational(-1, 20), 1}}) == -1);
}

TEST_CASE("filtration values order exactly") {
  auto half = FiltValue::of_rational(Rational(1, 2));
  auto rt2 = FiltValue::sqrt_of(2);
  auto neg = FiltValue::of_rational(Rational(-3, 4));
  CHECK(neg < half);
  CHECK(half < rt2);
  CHECK(rt2 == FiltValue::sqrt_of(2));
  CHECK(FiltValue::of_int(2) < FiltValue::sqrt_of(5));
  CHECK(FiltValue::sqrt_of(4) == FiltValue::of_int(2));
  CHECK(FiltValue::of_rational(Rational(-2)) < FiltValue::of_rational(Rational(-1)));
  CHECK(rt2.half() == FiltValue::sqrt_of(Rational(1, 2)));

  Rational r;
  CHECK(FiltValue::sqrt_of(Rational(9, 4)).is_rational(&r));
  CHECK(r == Rational(3, 2));
  CHECK(!rt2.is_rational());
}

TEST_CASE("filtration value text round-trip") {
  for (auto s : {"0.25", "-1.5", "22/7", "sqrt(2)", "-sqrt(4/3)", "0", "6.8"}) {
    auto v = FiltValue::parse(s);
    REQUIRE(v);
    CHECK(v->to_string() == s);
    auto again = FiltValue::parse(v->to_string());
    REQUIRE(again);
    CHECK(*again == *v);
  }
  CHECK(FiltValue::parse("sqrt(4)")->to_string() == "2");
  CHECK(!FiltValue::parse("sqrt(-1)"));
  CHECK(!FiltValue::parse("wat"));
}

TEST_CASE("metric values: differences, abs, comparisons") {
  auto a = FiltValue::of_int(6);
  auto b = FiltValue::of_rational(Rational(34, 5));  // 6.8
  auto d = MetricValue::diff(a, b).abs();
  Rational r;
  CHECK(d.is_rational(&r));
  CHECK(r == Rational(4, 5));
  CHECK(d < MetricValue::of_rational(1));

  // |sqrt(2) - 1| vs |2 - sqrt(3)|: 0.414 vs 0.268
  auto x = MetricValue::diff(FiltValue::sqrt_of(2), FiltValue::of_int(1)).abs();
  auto y = MetricValue::diff(FiltValue::of_int(2), FiltValue::sqrt_of(3)).abs();
  CHECK(y < x);
  CHECK(x.to_string() == "-1 + sqrt(2)");

  CHECK(MetricValue::inf() == MetricValue::inf());
  CHECK(MetricValue::of_rational(10000000) < MetricValue::inf());
  CHECK(MetricValue::zero() == MetricValue::of_rational(0));
  CHECK(MetricValue::diff(a, a) == MetricValue::zero());
  CHECK(MetricValue::of_rational(3).half() == MetricValue::of_rational(Rational(3, 2)));

  // max picks the larger exactly
  CHECK(MetricValue::max(x, y) == x);
}

TEST_CASE("metric value randomized comparison against high precision") {
  std::mt19937_64 rng(23);
  auto rnd_filt = [&]() {
    Rational q(int64_t(rng() % 400), int64_t(rng() % 7) + 1);
    return rng() % 2 ? FiltValue::sqrt_of(q) : FiltValue::of_rational(q);
  };
  for (int t = 0; t < 400; ++t) {
    auto a = rnd_filt(), b = rnd_filt(), c = rnd_filt(), d = rnd_filt();
    auto mv1 = MetricValue::diff(a, b).abs();
    auto mv2 = MetricValue::diff(c, d).abs();
    double f1 = std::abs(a.to_double() - b.to_double());
    double f2 = std::abs(c.to_double() - d.to_double());
    int cmp = mv1.cmp(mv2);
    if (std::abs(f1 - f2) > 1e-9) CHECK(cmp == (f1 < f2 ? -1 : 1));
  }
}
