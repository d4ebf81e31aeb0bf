#include <doctest.h>

#include <algorithm>
#include <random>
#include <tuple>
#include <vector>

#include "ainfty/builders.hpp"
#include "ainfty/errors.hpp"
#include "ainfty/kappa.hpp"
#include "ainfty/reduction.hpp"
#include "generators.hpp"

using namespace ainfty;

namespace {

using BarSig = std::tuple<std::string, bool, std::string>;

std::vector<BarSig> signature(const Barcode& bc) {
  std::vector<BarSig> out;
  for (auto& b : bc)
    out.emplace_back(b.birth.to_string(), b.death_inf, b.death_inf ? "" : b.death.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

int bars_through(const Barcode& bc, const FiltValue& t, const FiltValue& s) {
  int count = 0;
  for (auto& b : bc)
    if (!(t < b.birth) && (b.death_inf || s < b.death)) ++count;
  return count;
}

FilteredComplex fixture_complex(const std::string& name) {
  return FilteredComplex::load(std::string(AINFTY_FIXTURE_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("level-2 kernels in degree one recover the classical reduced barcode") {
  std::mt19937_64 rng(401);
  for (std::uint32_t field : {2u, 5u}) {
    for (int trial = 0; trial < 12; ++trial) {
      auto k = testgen::random_complex(rng, 8, 3, 10, 4, trial % 2 == 0);
      auto km = kappa_module(k, 2, 1, field);
      CHECK(km.top_n_verified);
      auto classical = classical_barcode(reduce(k, field), 1, true);
      CHECK(signature(kappa_barcode(km)) == signature(classical));
    }
  }
}

TEST_CASE("level-2 kernels in degree zero recover reduced components") {
  std::mt19937_64 rng(403);
  for (int trial = 0; trial < 8; ++trial) {
    auto k = testgen::random_complex(rng, 8, 2, 8, 3, trial % 2 == 0);
    auto km = kappa_module(k, 2, 0, 2);
    auto classical = classical_barcode(reduce(k, 2), 0, true);
    CHECK(signature(kappa_barcode(km)) == signature(classical));
  }
}

TEST_CASE("kernel dimensions are bounded by homology and stable across seeds") {
  std::mt19937_64 rng(409);
  for (int trial = 0; trial < 8; ++trial) {
    auto k = testgen::random_complex(rng, 8, 3, 9, 3, true);
    auto rd = reduce(k, 2);
    auto km0 = kappa_module(k, 2, 2, 2, /*seed=*/0);
    auto km1 = kappa_module(k, 2, 2, 2, /*seed=*/1234);
    REQUIRE(km0.module.grades == km1.module.grades);
    CHECK(km0.module.dims == km1.module.dims);
    CHECK(signature(kappa_barcode(km0)) == signature(kappa_barcode(km1)));
    for (int i = 0; i < km0.module.size(); ++i)
      CHECK(km0.module.dims[i] <= betti_at(rd, km0.module.grades[i], 2));
  }
}

TEST_CASE("kappa_at matches the module pointwise") {
  std::mt19937_64 rng(419);
  for (int trial = 0; trial < 6; ++trial) {
    auto k = testgen::random_complex(rng, 8, 3, 9, 3, true);
    auto km = kappa_module(k, 2, 2, 2);
    for (int i = 0; i < km.module.size(); ++i) {
      auto kb = kappa_at(k, km.module.grades[i], 2, 2, 2, km.seed);
      CHECK(kb.dim() == km.module.dims[i]);
      CHECK(static_cast<int>(kb.h_cells.size()) == kb.kernel.rows);
    }
  }
}

TEST_CASE("rank through a window counts the surviving intervals") {
  std::mt19937_64 rng(421);
  for (int trial = 0; trial < 8; ++trial) {
    auto k = testgen::random_complex(rng, 8, 3, 9, 4, true);
    auto rd = reduce(k, 2);
    for (int degree : {1, 2}) {
      auto km = kappa_module(k, 2, degree, 2);
      auto bc = kappa_barcode(km);
      auto grades = km.module.grades;
      for (std::size_t a = 0; a < grades.size(); ++a)
        for (std::size_t b = a; b < grades.size(); ++b) {
          int r = kappa_rank_between(k, rd, 2, degree, grades[a], grades[b], 2, 0);
          CHECK(r == bars_through(bc, grades[a], grades[b]));
        }
    }
  }
}

TEST_CASE("coned torus: the level-2 degree-2 module is zero") {
  auto k = fixture_complex("torus_filtration.txt");
  auto km = kappa_module(k, 2, 2, 2);
  CHECK(kappa_barcode(km).empty());
  for (int d : km.module.dims) CHECK(d == 0);
  auto crit = delta_critical_values(km);
  CHECK(crit.values.empty());
  CHECK(!crit.feature_size.has_value());
}

TEST_CASE("coned wedge: the level-2 degree-2 module is one bar") {
  auto k = fixture_complex("wedge_filtration.txt");
  auto km = kappa_module(k, 2, 2, 2);
  auto bc = kappa_barcode(km);
  REQUIRE(bc.size() == 1);
  CHECK(bc[0].birth == FiltValue::of_int(1));
  CHECK(!bc[0].death_inf);
  CHECK(bc[0].death == FiltValue::of_int(3));
  auto crit = delta_critical_values(km);
  REQUIRE(crit.values.size() == 2);
  CHECK(crit.values[0] == FiltValue::of_int(1));
  CHECK(crit.values[1] == FiltValue::of_int(3));
  REQUIRE(crit.feature_size.has_value());
  CHECK(*crit.feature_size == FiltValue::of_int(1));
}

TEST_CASE("level-3 hypothesis checking on the fixtures") {
  auto torus = fixture_complex("torus_filtration.txt");
  FiltValue t1 = FiltValue::of_int(1);

  auto cert = check_top_n(torus, t1, 3);
  CHECK(!cert.ok);
  CHECK(cert.failing_m == 2);
  CHECK(cert.witness_degree == 2);
  CHECK(!cert.witness.empty());
  CHECK(cert.grade == t1);
  CHECK_THROWS_AS(kappa_module(torus, 3, 2, 2), TopNViolationError);

  // level 2 is vacuously verified everywhere
  auto cert2 = check_top_n(torus, t1, 2);
  CHECK(cert2.ok);

  // on the wedge the binary coproduct vanishes at grade 1, so level 3 is
  // admissible there
  auto wedge = fixture_complex("wedge_filtration.txt");
  auto cert3 = check_top_n(wedge, t1, 3);
  CHECK(cert3.ok);
}

TEST_CASE("homological critical values pool the classical endpoints") {
  auto k = fixture_complex("wedge_filtration.txt");
  auto rd = reduce(k, 2);
  auto crit = homological_critical_values(rd);
  REQUIRE(!crit.empty());
  CHECK(std::is_sorted(crit.begin(), crit.end(),
                       [](const FiltValue& a, const FiltValue& b) { return a < b; }));
  // every classical endpoint in every degree appears
  for (int q = 0; q <= 2; ++q)
    for (auto& bar : classical_barcode(rd, q, false)) {
      CHECK(std::find(crit.begin(), crit.end(), bar.birth) != crit.end());
      if (!bar.death_inf) CHECK(std::find(crit.begin(), crit.end(), bar.death) != crit.end());
    }
}

TEST_CASE("a point cloud with irrational feature scales keeps them exact") {
  // unit square: the four edges appear at 1/2, the diagonal fills at
  // sqrt(2)/2, so the degree-1 class lives on [1/2, sqrt(1/2))
  auto pc = PointCloud::from_coords({{Rational(0), Rational(0)},
                                     {Rational(1), Rational(0)},
                                     {Rational(0), Rational(1)},
                                     {Rational(1), Rational(1)}});
  auto k = cech_filtration(pc, 2, FiltValue::of_int(2));
  auto km = kappa_module(k, 2, 1, 2);
  auto bc = kappa_barcode(km);
  REQUIRE(bc.size() == 1);
  CHECK(bc[0].birth == FiltValue::of_rational(Rational(1, 2)));
  CHECK(!bc[0].death_inf);
  CHECK(bc[0].death == FiltValue::sqrt_of(Rational(1, 2)));
  auto crit = delta_critical_values(km);
  REQUIRE(crit.values.size() == 2);
  CHECK(crit.values[0] == FiltValue::of_rational(Rational(1, 2)));
  CHECK(crit.values[1] == FiltValue::sqrt_of(Rational(1, 2)));
  REQUIRE(crit.feature_size.has_value());
  CHECK(*crit.feature_size == FiltValue::of_rational(Rational(1, 2)));
}
