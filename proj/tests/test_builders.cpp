#include <doctest.h>

#include <cmath>
#include <random>

#include "ainfty/builders.hpp"
#include "ainfty/errors.hpp"
#include "ainfty/kappa.hpp"
#include "ainfty/reduction.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace ainfty;

namespace {

std::string fixture(const std::string& name) {
  return std::string(AINFTY_FIXTURE_DIR) + "/" + name;
}

FiltValue value_of(const FilteredComplex& k, const Simplex& s) {
  auto idx = k.index_of(s);
  REQUIRE(idx.has_value());
  return k.value(*idx);
}

}  // namespace

TEST_CASE("rips filtration puts an edge at half its length") {
  auto pc = PointCloud::from_coords({{Rational(0)}, {Rational(2)}});
  auto k = rips_filtration(pc, 1, FiltValue::of_int(10));
  REQUIRE(k.size() == 3);
  CHECK(value_of(k, Simplex::of({0})) == FiltValue{});
  CHECK(value_of(k, Simplex::of({0, 1})) == FiltValue::of_int(1));

  // same cloud through a distance matrix, including an exact sqrt entry
  auto pm = PointCloud::from_matrix(
      {{FiltValue{}, FiltValue::sqrt_of(Rational(2))}, {FiltValue::sqrt_of(Rational(2)), FiltValue{}}});
  auto km = rips_filtration(pm, 1, FiltValue::of_int(10));
  CHECK(value_of(km, Simplex::of({0, 1})) == FiltValue::sqrt_of(Rational(1, 2)));
}

TEST_CASE("rips respects the dimension and radius caps") {
  auto pc = PointCloud::from_coords(
      {{Rational(0), Rational(0)}, {Rational(2), Rational(0)}, {Rational(0), Rational(2)},
       {Rational(2), Rational(2)}});
  auto k1 = rips_filtration(pc, 1, FiltValue::of_int(1));
  for (int i = 0; i < k1.size(); ++i) {
    CHECK(k1.simplex(i).dim() <= 1);
    CHECK(!(FiltValue::of_int(1) < k1.value(i)));
  }
  // the diagonal edge (length 2*sqrt(2), scale sqrt(2)) is cut off
  CHECK(!k1.index_of(Simplex::of({0, 3})));
  CHECK(k1.index_of(Simplex::of({0, 1})));

  auto k2 = rips_filtration(pc, 3, FiltValue::of_int(5));
  CHECK(k2.index_of(Simplex::of({0, 1, 2, 3})));
  CHECK(value_of(k2, Simplex::of({0, 1, 2, 3})) == FiltValue::sqrt_of(Rational(2)));
  REQUIRE(k2.validate().ok());
}

TEST_CASE("cech values are exact minimal enclosing radii") {
  // an equilateral triangle with side sqrt(2), circumradius sqrt(2/3)
  auto pc = PointCloud::from_coords({{Rational(1), Rational(0), Rational(0)},
                                     {Rational(0), Rational(1), Rational(0)},
                                     {Rational(0), Rational(0), Rational(1)}});
  auto k = cech_filtration(pc, 2, FiltValue::of_int(3));
  CHECK(value_of(k, Simplex::of({0, 1})) == FiltValue::sqrt_of(Rational(1, 2)));
  CHECK(value_of(k, Simplex::of({0, 1, 2})) == FiltValue::sqrt_of(Rational(2, 3)));

  // an obtuse triangle is covered by its longest edge's midpoint ball
  auto obtuse = PointCloud::from_coords({{Rational(0), Rational(0)},
                                         {Rational(4), Rational(0)},
                                         {Rational(1), Rational(1, 2)}});
  auto ko = cech_filtration(obtuse, 2, FiltValue::of_int(5));
  CHECK(value_of(ko, Simplex::of({0, 1, 2})) == FiltValue::of_int(2));
  CHECK(value_of(ko, Simplex::of({0, 1})) == FiltValue::of_int(2));

  CHECK_THROWS_AS(cech_filtration(PointCloud::from_matrix({{FiltValue{}}}), 1, FiltValue::of_int(1)),
                  ValidationError);
}

TEST_CASE("rips and cech interleave simplexwise") {
  std::mt19937_64 rng(601);
  for (int trial = 0; trial < 10; ++trial) {
    auto cloud = testgen::random_cloud(rng, 6, 2, 6, 2);
    auto pc = PointCloud::from_coords(cloud);
    FiltValue cap = FiltValue::of_int(40);
    auto rips = rips_filtration(pc, 2, cap);
    auto cech = cech_filtration(pc, 2, cap);
    REQUIRE(rips.size() == cech.size());
    for (int i = 0; i < cech.size(); ++i) {
      const Simplex& s = cech.simplex(i);
      FiltValue r = value_of(rips, s);
      FiltValue c = cech.value(i);
      CHECK(!(c < r));                   // rips enters first
      CHECK(!(filt_scale(r, 2) < c));    // within a factor of two
    }
  }
}

TEST_CASE("miniball agrees with the exhaustive subset oracle") {
  std::mt19937_64 rng(607);
  for (int trial = 0; trial < 60; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 3);
    int n = 1 + static_cast<int>(rng() % 8);
    auto pts = testgen::random_cloud(rng, n, dim, 8, 3);
    Rational r2 = miniball_sq_radius(pts);
    CHECK(r2 == oracle::oracle_miniball_sq(pts));
  }
  CHECK_THROWS_AS(miniball_sq_radius({}), EmptySetError);
  CHECK(miniball_sq_radius({{Rational(7), Rational(-2)}}) == Rational(0));
  CHECK(miniball_sq_radius({{Rational(0)}, {Rational(3)}}) == Rational(9, 4));
  // duplicated points collapse to radius zero
  CHECK(miniball_sq_radius({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}}) ==
        Rational(0));
}

TEST_CASE("lower-star filtration takes vertexwise maxima") {
  auto base = FilteredComplex::from_pairs({{Simplex::of({0}), FiltValue{}},
                                           {Simplex::of({1}), FiltValue{}},
                                           {Simplex::of({2}), FiltValue{}},
                                           {Simplex::of({0, 1}), FiltValue{}},
                                           {Simplex::of({1, 2}), FiltValue{}},
                                           {Simplex::of({0, 2}), FiltValue{}},
                                           {Simplex::of({0, 1, 2}), FiltValue{}}});
  std::map<int, Rational> f = {{0, Rational(0)}, {1, Rational(5)}, {2, Rational(2)}};
  auto k = lower_star(base, f);
  REQUIRE(k.validate().ok());
  CHECK(value_of(k, Simplex::of({0})) == FiltValue::of_int(0));
  CHECK(value_of(k, Simplex::of({1})) == FiltValue::of_int(5));
  CHECK(value_of(k, Simplex::of({0, 2})) == FiltValue::of_int(2));
  CHECK(value_of(k, Simplex::of({0, 1, 2})) == FiltValue::of_int(5));

  // each sublevel set is the full subcomplex on the sublevel vertices
  for (auto& t : k.grades()) {
    int m = k.prefix_size_at(t);
    for (int i = 0; i < k.size(); ++i) {
      bool all_under = true;
      for (int v : k.simplex(i).v) all_under &= !(t < FiltValue::of_rational(f.at(v)));
      CHECK((i < m) == all_under);
    }
  }

  std::map<int, Rational> missing = {{0, Rational(0)}, {1, Rational(1)}};
  CHECK_THROWS_AS(lower_star(base, missing), ValidationError);
}

TEST_CASE("lower-star degree-0 intervals count local minima on a cycle") {
  // a 6-cycle with heights 0 2 1 3 0 4: three local minima
  std::vector<std::pair<Simplex, FiltValue>> pairs;
  for (int v = 0; v < 6; ++v) pairs.emplace_back(Simplex::of({v}), FiltValue{});
  for (int v = 0; v < 6; ++v) pairs.emplace_back(Simplex::of({std::min(v, (v + 1) % 6), std::max(v, (v + 1) % 6)}), FiltValue{});
  auto base = FilteredComplex::from_pairs(pairs);
  std::map<int, Rational> f = {{0, Rational(0)}, {1, Rational(2)}, {2, Rational(1)},
                               {3, Rational(3)}, {4, Rational(0)}, {5, Rational(4)}};
  auto k = lower_star(base, f);
  auto bars = classical_barcode(reduce(k, 2), 0, false);
  CHECK(bars.size() == 3);
  int essentials = 0;
  for (auto& b : bars) essentials += b.death_inf;
  CHECK(essentials == 1);
}

TEST_CASE("point cloud and matrix parsing") {
  auto pc = parse_point_cloud("# two points\n0, 0\n1/2\t-0.25\n");
  REQUIRE(pc.size() == 2);
  CHECK(pc.coords[1][0] == Rational(1, 2));
  CHECK(pc.coords[1][1] == Rational(-1, 4));

  CHECK_THROWS_AS(parse_point_cloud("0 0\n1\n"), ParseError);      // ragged row
  CHECK_THROWS_AS(parse_point_cloud("0 x\n"), ParseError);         // bad token
  CHECK_THROWS_AS(parse_point_cloud(""), ParseError);              // no points
  CHECK_THROWS_AS(parse_point_cloud("# only a comment\n"), ParseError);

  auto pm = parse_distance_matrix("0 sqrt(2)\nsqrt(2) 0\n");
  CHECK(pm.distance(0, 1) == FiltValue::sqrt_of(Rational(2)));

  CHECK_THROWS_AS(parse_distance_matrix("0 1\n1 0 0\n"), ValidationError);      // ragged
  CHECK_THROWS_AS(parse_distance_matrix("0 1 1\n1 0 1\n"), ValidationError);  // not square
  CHECK_THROWS_AS(parse_distance_matrix("1 1\n1 0\n"), ValidationError);  // diagonal
  CHECK_THROWS_AS(parse_distance_matrix("0 1\n2 0\n"), ValidationError);  // asymmetric
  CHECK_THROWS_AS(parse_distance_matrix("0 -1\n-1 0\n"), ValidationError);
  // 1 + 1 < 3 breaks the triangle inequality
  CHECK_THROWS_AS(parse_distance_matrix("0 1 3\n1 0 1\n3 1 0\n"), ValidationError);
}

TEST_CASE("filt_scale multiplies exactly") {
  CHECK(filt_scale(FiltValue::sqrt_of(Rational(2)), 2) == FiltValue::sqrt_of(Rational(8)));
  CHECK(filt_scale(FiltValue::of_rational(Rational(3, 4)), 3) ==
        FiltValue::of_rational(Rational(9, 4)));
  CHECK(filt_scale(FiltValue::of_int(5), 0) == FiltValue{});
  CHECK_THROWS_AS(filt_scale(FiltValue::of_int(1), -1), std::invalid_argument);
}

TEST_CASE("feature counts on circles") {
  auto circle = load_point_cloud(fixture("circle_20.csv"));
  REQUIRE(circle.size() == 20);
  FiltValue eps = FiltValue::of_rational(Rational(1, 4));

  InferOptions opt;  // level 2, degree 1, Cech
  auto res = infer_features(circle, eps, opt);
  CHECK(res.count == 1);
  CHECK(res.window_lo == eps);
  CHECK(res.window_hi == FiltValue::of_rational(Rational(3, 4)));

  auto two = load_point_cloud(fixture("two_circles.csv"));
  auto res2 = infer_features(two, eps, opt);
  CHECK(res2.count == 2);

  InferOptions deg2 = opt;
  deg2.degree = 2;
  deg2.max_dim = 3;
  CHECK(infer_features(circle, eps, deg2).count == 0);

  InferOptions rips = opt;
  rips.use_rips = true;
  CHECK(infer_features(circle, eps, rips).count == 1);

  CHECK_THROWS_AS(infer_features(circle, FiltValue{}, opt), ValidationError);
  CHECK_THROWS_AS(infer_features(circle, FiltValue::of_int(-1), opt), ValidationError);
}
