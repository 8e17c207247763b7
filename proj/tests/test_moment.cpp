#include <doctest.h>

#include <cmath>

#include "gt42/moment.hpp"
#include "gt42/morse.hpp"
#include "gt42/random.hpp"
#include "gt42/strata.hpp"

using namespace gt42;

TEST_SUITE("moment") {
  TEST_CASE("vertex weights reproduce hypersimplex vertices exactly") {
    for (int k = 0; k < kNumPairs; ++k) {
      std::array<Rational, kNumPairs> w{};
      w[k] = 1;
      const MomentPoint<Rational> mu = moment_from_weights(w);
      const auto d = delta(k);
      for (int i = 0; i < 4; ++i) CHECK(mu[i] == Rational(d[i]));
      CHECK(mu.valid());
    }
    std::array<Rational, kNumPairs> zero{};
    CHECK_THROWS_AS(moment_from_weights(zero), ZeroVectorError);
  }

  TEST_CASE("moment of a concrete frame, exactly") {
    // Minors (1,1,1,-2,-1,1): weights (1,1,1,4,1,1), total 9.
    const auto f = stratum_witness<GaussianRational>(ZeroPattern(63));
    const MomentPoint<Rational> mu = moment_g42(plucker_coordinates(f));
    CHECK(mu[0] == Rational(1, 3));
    CHECK(mu[1] == Rational(2, 3));
    CHECK(mu[2] == Rational(2, 3));
    CHECK(mu[3] == Rational(1, 3));
    CHECK(mu.valid());
  }

  TEST_CASE("validity window") {
    MomentPoint<double> p{{0.5, 0.5, 0.5, 0.5}};
    CHECK(p.valid());
    p[0] = 1.5;
    CHECK_FALSE(p.valid());
    MomentPoint<double> q{{1.0, 1.0, 0.5, 0.0}};  // sums to 2.5
    CHECK_FALSE(q.valid());
    MomentPoint<Rational> r{{Rational(1), Rational(1, 2), Rational(1, 2), Rational(0)}};
    CHECK(r.valid());
  }

  TEST_CASE("moment image lands in the hypersimplex for random frames") {
    Rng rng(37);
    for (int i = 0; i < 200; ++i) {
      const auto f = random_frame<Complex>(rng);
      CHECK(moment_g42(plucker_coordinates(f)).valid());
    }
  }

  TEST_CASE("orthonormal frames: moment equals the diagonal of A A^H") {
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
      const auto f = random_orthonormal_frame<Complex>(rng);
      const MomentPoint<double> mu = moment_g42(plucker_coordinates(f));
      for (int r = 0; r < 4; ++r) {
        const double diag = std::norm(f(r, 0)) + std::norm(f(r, 1));
        CHECK(std::abs(diag - mu[r]) <= 1e-12);
      }
      // The orthonormalizing projection computes the same values.
      const MomentPoint<double> proj = diag_projection(f);
      for (int r = 0; r < 4; ++r) CHECK(std::abs(proj[r] - mu[r]) <= 1e-12);
    }
  }

  TEST_CASE("diagonal projection orthonormalizes arbitrary frames first") {
    Rng rng(43);
    for (int i = 0; i < 100; ++i) {
      const auto f = random_frame<Complex>(rng);
      const MomentPoint<double> proj = diag_projection(f);
      const MomentPoint<double> mu = moment_g42(plucker_coordinates(f));
      for (int r = 0; r < 4; ++r) CHECK(std::abs(proj[r] - mu[r]) <= 1e-9);
    }
  }

  TEST_CASE("moment is invariant under the unit torus") {
    Rng rng(47);
    for (int i = 0; i < 100; ++i) {
      const auto f = random_frame<Complex>(rng);
      const auto t = random_torus_element<Complex>(rng, /*unit_modulus=*/true);
      const MomentPoint<double> a = moment_g42(plucker_coordinates(f));
      const MomentPoint<double> b = moment_g42(plucker_coordinates(torus_act(t, f)));
      for (int r = 0; r < 4; ++r) CHECK(std::abs(a[r] - b[r]) <= 1e-12);
    }
  }

  TEST_CASE("octahedron combinatorics of the moment image") {
    CHECK(Hypersimplex::vertices().size() == 6);
    CHECK(Hypersimplex::edges().size() == 12);
    const auto facets = Hypersimplex::facets();
    CHECK(facets.size() == 8);
    for (const auto& e : Hypersimplex::edges())
      CHECK(e[1] != complement_index(e[0]));
    // Facets come in star/costar pairs: vertices containing i, then avoiding i.
    for (int i = 1; i <= 4; ++i) {
      for (int k : facets[2 * (i - 1)]) CHECK(kPairs[k].contains(i));
      for (int k : facets[2 * (i - 1) + 1]) CHECK_FALSE(kPairs[k].contains(i));
    }
  }

  TEST_CASE("cone factorization residual vanishes in every chart") {
    Rng rng(53);
    for (int k = 0; k < kNumPairs; ++k) {
      for (int i = 0; i < 25; ++i) {
        ChartCoords<Complex> cc;
        cc.chart = ChartId{k};
        for (auto& a : cc.a) a = random_scalar<Complex>(rng);
        const ConeCoordsReport rep = cone_factorization_check(cc);
        CHECK(rep.residual < 1e-9);
        CHECK(rep.chart.pair == k);
        for (double x : rep.xi) CHECK(x >= 0.0);
      }
    }
  }

  TEST_CASE("height of the barycenter") {
    MomentPoint<double> center{{0.5, 0.5, 0.5, 0.5}};
    CHECK(morse_value(center) == doctest::Approx(7.5));
    CHECK(morse_value(center, {1, 1, 1, 1}) == doctest::Approx(2.0));
  }
}
