#include <cmath>
#include <cstring>
#include <doctest.h>
#include <stdexcept>
#include <random>

#include "magnonics/entanglement.hpp"
#include "magnonics/errors.hpp"
#include "magnonics/oracle.hpp"
#include "testutil.hpp"

using namespace magnonics;

TEST_CASE("pair names") {
  CHECK(std::strcmp(pair_name(ModePair::light_magnon), "light_magnon") == 0);
  CHECK(std::strcmp(pair_name(ModePair::light_microwave), "light_microwave") == 0);
  CHECK(std::strcmp(pair_name(ModePair::microwave_magnon), "microwave_magnon") == 0);
}

TEST_CASE("reduce picks the right blocks out of the 6x6 ordering") {
  // Marker matrix v(i,j) = (i+1)(j+1): symmetric, every block distinct.
  Mat v(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) v(i, j) = double((i + 1) * (j + 1));

  const BipartiteCov lm = reduce(v, ModePair::light_magnon);
  CHECK(lm.v1 == Mat{{9.0, 12.0}, {12.0, 16.0}});    // light owns v1
  CHECK(lm.v2 == Mat{{1.0, 2.0}, {2.0, 4.0}});       // magnon
  CHECK(lm.v3 == Mat{{3.0, 6.0}, {4.0, 8.0}});       // light rows x magnon cols
  CHECK(lm.pair == ModePair::light_magnon);

  const BipartiteCov lb = reduce(v, ModePair::light_microwave);
  CHECK(lb.v1 == Mat{{9.0, 12.0}, {12.0, 16.0}});
  CHECK(lb.v2 == Mat{{25.0, 30.0}, {30.0, 36.0}});
  CHECK(lb.v3 == Mat{{15.0, 18.0}, {20.0, 24.0}});

  const BipartiteCov bm = reduce(v, ModePair::microwave_magnon);
  CHECK(bm.v1 == Mat{{25.0, 30.0}, {30.0, 36.0}});   // microwave owns v1 here
  CHECK(bm.v2 == Mat{{1.0, 2.0}, {2.0, 4.0}});
  CHECK(bm.v3 == Mat{{5.0, 10.0}, {6.0, 12.0}});

  CHECK_THROWS_AS(reduce(Mat::identity(4), ModePair::light_magnon),
                  std::invalid_argument);
}

TEST_CASE("assemble round-trips the blocks into a symmetric 4x4") {
  BipartiteCov b;
  b.pair = ModePair::light_magnon;
  b.v1 = Mat{{1.0, 2.0}, {2.0, 3.0}};
  b.v2 = Mat{{4.0, 5.0}, {5.0, 6.0}};
  b.v3 = Mat{{7.0, 8.0}, {9.0, 10.0}};
  const Mat v = assemble(b);
  const Mat expected{{1.0, 2.0, 7.0, 8.0},
                     {2.0, 3.0, 9.0, 10.0},
                     {7.0, 9.0, 4.0, 5.0},
                     {8.0, 10.0, 5.0, 6.0}};
  CHECK(v == expected);

  // reduce . assemble is the identity on blocks (via a 6x6 embedding check).
  Mat six(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) six(i, j) = double((i + 2) * (j + 3));
  const BipartiteCov again = reduce(six, ModePair::microwave_magnon);
  const Mat v2 = assemble(again);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(v2(i, j) == again.v1(i, j));
      CHECK(v2(i + 2, j + 2) == again.v2(i, j));
      CHECK(v2(i, j + 2) == again.v3(i, j));
    }
}

TEST_CASE("vacuum carries no entanglement and sits on the bound") {
  const EntanglementResult r =
      log_negativity(testutil::split_cov(0.5 * Mat::identity(4), ModePair::light_magnon));
  CHECK(r.e_n == 0.0);
  CHECK(r.eta_minus == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("two-mode squeezed vacuum reproduces the closed form") {
  for (double r : {0.1, 0.5, 1.0}) {
    const EntanglementResult e = log_negativity(testutil::tms_cov(r));
    CHECK(e.e_n == doctest::Approx(2.0 * r).epsilon(1e-9));
    CHECK(e.eta_minus == doctest::Approx(0.5 * std::exp(-2.0 * r)).epsilon(1e-12));
  }

  // Monotone in the squeezing parameter.
  double prev = -1.0;
  for (double r = 0.05; r < 1.6; r += 0.15) {
    const double en = log_negativity(testutil::tms_cov(r)).e_n;
    CHECK(en > prev);
    prev = en;
  }
}

TEST_CASE("uncorrelated thermal product state is separable") {
  const EntanglementResult r = log_negativity(
      testutil::split_cov(Mat::diagonal({0.7, 0.7, 1.2, 1.2}), ModePair::light_microwave));
  CHECK(r.e_n == 0.0);
  CHECK(r.eta_minus == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("local rotations leave the entanglement invariant") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> angle(0.0, two_pi);
  for (int k = 0; k < 25; ++k) {
    const Mat v = testutil::random_physical_cov(rng);
    const Mat s = testutil::direct_sum2(testutil::rotation2(angle(rng)),
                                        testutil::rotation2(angle(rng)));
    const Mat w = symmetrize(s * v * transpose(s));
    const EntanglementResult a = log_negativity(testutil::split_cov(v, ModePair::light_magnon));
    const EntanglementResult b = log_negativity(testutil::split_cov(w, ModePair::light_magnon));
    CHECK(a.eta_minus == doctest::Approx(b.eta_minus).epsilon(1e-10));
    CHECK(a.e_n == doctest::Approx(b.e_n).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("closed form agrees with the brute-force symplectic spectrum") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 100; ++k) {
    const BipartiteCov b =
        testutil::split_cov(testutil::random_physical_cov(rng), ModePair::light_magnon);
    const double closed = log_negativity(b).eta_minus;
    const double brute = brute_force_eta(b);
    CHECK(std::abs(closed - brute) <= 1e-8);
  }
}

TEST_CASE("unphysical covariances are rejected") {
  // X-X correlations strong enough to break the uncertainty principle make
  // the smaller squared symplectic eigenvalue negative.
  BipartiteCov b;
  b.pair = ModePair::light_magnon;
  b.v1 = 0.5 * Mat::identity(2);
  b.v2 = b.v1;
  b.v3 = Mat{{0.7, 0.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(log_negativity(b), NonPhysicalStateError);

  // A covariance whose partial transpose has a complex symplectic spectrum
  // drives the discriminant itself negative.
  const Mat bad{{0.25019093, 0.19738009, 0.57275512, -0.51992322},
                {0.19738009, 0.74710689, -0.52679974, 0.26630472},
                {0.57275512, -0.52679974, -0.39393515, -0.21702613},
                {-0.51992322, 0.26630472, -0.21702613, 0.1069947}};
  CHECK_THROWS_AS(log_negativity(testutil::split_cov(bad, ModePair::light_magnon)),
                  NonPhysicalStateError);
}

TEST_CASE("a discriminant a hair below zero is treated as zero") {
  // Synthetic input tuned so sigma^2 - 4 det V = -5.0e-10: inside the
  // roundoff window, so the solver must clamp instead of producing NaN.
  const Mat v{
      {0.3195427783133587, 0.16694790226808723, 0.48444737155255407, -0.43976112747475804},
      {0.16694790226808723, 0.73984391975843933, -0.44557742125040956, 0.2252456890058685},
      {0.48444737155255407, -0.44557742125040956, -0.14818121546032811, -0.18356490333377187},
      {-0.43976112747475804, 0.2252456890058685, -0.18356490333377187, 0.27551495187330516}};
  const BipartiteCov b = testutil::split_cov(v, ModePair::light_magnon);
  EntanglementResult r;
  REQUIRE_NOTHROW(r = log_negativity(b));
  CHECK(std::isfinite(r.e_n));
  // With the discriminant clamped, eta = sqrt(sigma / 2) exactly.
  CHECK(r.eta_minus == doctest::Approx(0.3922205117609239).epsilon(1e-9));
  CHECK(r.e_n == doctest::Approx(0.24278388679006352).epsilon(1e-7));
}

TEST_CASE("all_pairs maps each bipartition to the right blocks") {
  // Embed a two-mode squeezed state into one pair of the 6x6 matrix at a
  // time; only that pair may report entanglement, and exactly 2r of it.
  const double r = 0.4;
  const BipartiteCov tms = testutil::tms_cov(r);
  struct Layout {
    ModePair pair;
    std::size_t first, second;
  };
  const Layout layouts[] = {{ModePair::light_magnon, 2, 0},
                            {ModePair::light_microwave, 2, 4},
                            {ModePair::microwave_magnon, 4, 0}};
  for (const Layout& lay : layouts) {
    Mat v = 0.5 * Mat::identity(6);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        v(lay.first + i, lay.first + j) = tms.v1(i, j);
        v(lay.second + i, lay.second + j) = tms.v2(i, j);
        v(lay.first + i, lay.second + j) = tms.v3(i, j);
        v(lay.second + j, lay.first + i) = tms.v3(i, j);
      }
    const PairEntanglement pe = all_pairs(v);
    const EntanglementResult per_pair[] = {pe.light_magnon, pe.light_microwave,
                                           pe.microwave_magnon};
    for (const Layout& probe : layouts) {
      const EntanglementResult got = per_pair[&probe - layouts];
      if (probe.pair == lay.pair) {
        CHECK(got.e_n == doctest::Approx(2.0 * r).epsilon(1e-9));
      } else {
        CHECK(got.e_n == doctest::Approx(0.0).epsilon(1e-12));
      }
    }
  }
}
