#include <doctest.h>

#include "gt42/cp5.hpp"
#include "gt42/random.hpp"

using namespace gt42;

namespace {

template <class S>
CP5Point<S> indicator(unsigned long bits) {
  CP5Point<S> z;
  for (int k = 0; k < kNumPairs; ++k)
    if (bits & (1ul << k)) z.z[k] = ScalarTraits<S>::from_int(1);
  return z;
}

template <class S>
CP5Point<S> random_cp5(Rng& rng) {
  CP5Point<S> z;
  for (auto& v : z.z) v = random_scalar<S>(rng);
  return z;
}

}  // namespace

TEST_SUITE("cp5") {
  TEST_CASE("symmetric-square action scales coordinate {i,j} by t_i t_j") {
    TorusElement<GaussianRational> t;
    t.t = {GaussianRational(2), GaussianRational(3), GaussianRational(5), GaussianRational(7)};
    const auto z = indicator<GaussianRational>(0b111111);
    const auto w = symmetric_square_act(t, z);
    CHECK(w.z[0] == GaussianRational(6));    // 12
    CHECK(w.z[1] == GaussianRational(10));   // 13
    CHECK(w.z[2] == GaussianRational(14));   // 14
    CHECK(w.z[3] == GaussianRational(15));   // 23
    CHECK(w.z[4] == GaussianRational(21));   // 24
    CHECK(w.z[5] == GaussianRational(35));   // 34
  }

  TEST_CASE("diagonal scalars act trivially on projective points") {
    Rng rng(67);
    for (int i = 0; i < 50; ++i) {
      auto z = random_cp5<Complex>(rng);
      TorusElement<Complex> t;
      const Complex lambda = random_unit_scale<Complex>(rng);
      t.t = {lambda, lambda, lambda, lambda};
      CHECK(proportional(symmetric_square_act(t, z), z));
    }
  }

  TEST_CASE("the torus fixes exactly the six coordinate points") {
    Rng rng(71);
    for (unsigned long bits = 1; bits < 64; ++bits) {
      const auto z = indicator<Complex>(bits);
      bool fixed = true;
      for (int trial = 0; trial < 5 && fixed; ++trial) {
        const auto t = random_torus_element<Complex>(rng);
        fixed = proportional(symmetric_square_act(t, z), z);
      }
      CHECK(fixed == (std::bitset<6>(bits).count() == 1));
    }
  }

  TEST_CASE("plucker images satisfy the quadric, generic points do not") {
    Rng rng(73);
    for (int i = 0; i < 50; ++i) {
      const auto f = random_frame<GaussianRational>(rng);
      const auto z = plucker_embed(plucker_coordinates(f));
      CHECK(quadric_residual(z) == GaussianRational(0));
      CHECK(is_on_plucker_quadric(z));
    }
    int off = 0;
    for (int i = 0; i < 50; ++i)
      if (!is_on_plucker_quadric(random_cp5<Complex>(rng))) ++off;
    CHECK(off >= 45);  // measure-zero locus: nearly every sample is off
    CHECK_THROWS_AS(is_on_plucker_quadric(CP5Point<Complex>{}), ZeroVectorError);
    CHECK_THROWS_AS(nonzero_pattern(CP5Point<Complex>{}), ZeroVectorError);
  }

  TEST_CASE("every nonempty vertex subset is realized on CP^5") {
    // On the Grassmannian only 36 patterns occur; the ambient space has all 63.
    for (unsigned long bits = 1; bits < 64; ++bits) {
      const auto z = indicator<GaussianRational>(bits);
      CHECK(nonzero_pattern(z).to_ulong() == bits);
      const auto rep = cp5_stratum(z);
      CHECK(rep.vertices.to_ulong() == bits);
      CHECK(rep.polytope_dim == pattern_affine_dim(ZeroPattern(bits)));
    }
    CHECK(pattern_affine_dim(ZeroPattern(0b100001)) == 1);  // interior diagonal
    CHECK(pattern_affine_dim(ZeroPattern(0b111111)) == 3);
  }

  TEST_CASE("orbit parameter triple: defined exactly on antipodal-pair strata") {
    // {12,13}: no antipodal pair -> the torus is transitive, nothing to separate.
    CHECK_FALSE(orbit_parameter_triple(indicator<Complex>(0b000011)).has_value());
    // {12,34}: one invariant product survives.
    const auto p = orbit_parameter_triple(indicator<Complex>(0b100001));
    REQUIRE(p.has_value());
    CHECK(std::abs(p->c[0]) == doctest::Approx(0.0));
    CHECK(std::abs(p->c[1]) == doctest::Approx(0.0));
    CHECK(std::abs(p->c[2]) == doctest::Approx(1.0));
  }

  TEST_CASE("parameter triple is torus invariant and separates orbits") {
    Rng rng(79);
    for (int i = 0; i < 60; ++i) {
      const auto z = random_cp5<Complex>(rng);
      const auto t = random_torus_element<Complex>(rng);
      const auto a = orbit_parameter_triple(z);
      const auto b = orbit_parameter_triple(symmetric_square_act(t, z));
      REQUIRE(a.has_value());
      REQUIRE(b.has_value());
      CHECK(a->equals(*b));
    }
    // Two dense points with different triples are inequivalent; equal triples
    // plus equal pattern means same orbit (checked via an explicit witness).
    CP5Point<Complex> z1 = indicator<Complex>(0b111111);
    CP5Point<Complex> z2 = z1;
    z2.z[0] = Complex(2);
    const auto a = orbit_parameter_triple(z1);
    const auto b = orbit_parameter_triple(z2);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK_FALSE(a->equals(*b));
  }

  TEST_CASE("grassmannian strata keep their polytope under the embedding") {
    Rng rng(83);
    for (const AdmissiblePolytope& pp : admissible_table()) {
      const auto f = random_point_in_stratum<GaussianRational>(pp.vertices, rng);
      const auto rep = cp5_stratum(plucker_embed(plucker_coordinates(f)));
      CHECK(rep.vertices == pp.vertices);
      CHECK(rep.polytope_dim == pp.dim);
    }
  }

  TEST_CASE("moment map on CP^5 matches the weighted barycenter") {
    // Equal weight on the antipodal vertices 12 and 34: the barycenter.
    const auto g = indicator<GaussianRational>(0b100001);
    const MomentPoint<Rational> mu = moment_cp5(g);
    for (int i = 0; i < 4; ++i) CHECK(mu[i] == Rational(1, 2));
    // A lone vertex maps to that vertex.
    const MomentPoint<Rational> v = moment_cp5(indicator<GaussianRational>(0b000010));
    const auto d = delta(1);
    for (int i = 0; i < 4; ++i) CHECK(v[i] == Rational(d[i]));
  }

  TEST_CASE("induced embedding of the parameter line") {
    // Affine parameter c maps to (c : 1 : 1-c).
    const ProjectiveParam<GaussianRational> c{GaussianRational(3), GaussianRational(1)};
    const auto tri = induced_embedding(c);
    CHECK(tri.c[0] == GaussianRational(3));
    CHECK(tri.c[1] == GaussianRational(1));
    CHECK(tri.c[2] == GaussianRational(-2));
    // Boundary values.
    const auto at_zero = induced_embedding(ProjectiveParam<GaussianRational>::zero());
    CHECK(at_zero.equals(ProjectiveTriple<GaussianRational>{{GaussianRational(0), GaussianRational(1), GaussianRational(1)}}));
    const auto at_one = induced_embedding(ProjectiveParam<GaussianRational>::one());
    CHECK(at_one.equals(ProjectiveTriple<GaussianRational>{{GaussianRational(1), GaussianRational(1), GaussianRational(0)}}));
    const auto at_inf = induced_embedding(ProjectiveParam<GaussianRational>::infinity());
    CHECK(at_inf.equals(ProjectiveTriple<GaussianRational>{{GaussianRational(1), GaussianRational(0), GaussianRational(-1)}}));
  }

  TEST_CASE("induced embedding matches the brute-force oracle") {
    Rng rng(89);
    for (int i = 0; i < 40; ++i) {
      ProjectiveParam<GaussianRational> c{random_scalar<GaussianRational>(rng),
                                          random_scalar<GaussianRational>(rng)};
      if (ScalarTraits<GaussianRational>::abs_sq(c.den) == 0 ||
          ScalarTraits<GaussianRational>::abs_sq(c.num) == 0)
        continue;
      CHECK(induced_embedding(c).equals(embedding_oracle(c)));
    }
  }

  TEST_CASE("the alternate closed form disagrees away from special parameters") {
    const ProjectiveParam<GaussianRational> c{GaussianRational(3), GaussianRational(1)};
    CHECK_FALSE(induced_embedding_alternate(c).equals(embedding_oracle(c)));
    // It coincides with the oracle only on the locus c^2 = 1 and degenerations.
    const ProjectiveParam<GaussianRational> minus_one{GaussianRational(-1), GaussianRational(1)};
    CHECK(induced_embedding_alternate(minus_one).equals(embedding_oracle(minus_one)));
  }

  TEST_CASE("triple distance is a projective metric") {
    const ProjectiveTriple<Complex> a{{Complex(1), Complex(2), Complex(3)}};
    const ProjectiveTriple<Complex> b{{Complex(2), Complex(4), Complex(6)}};
    const ProjectiveTriple<Complex> c{{Complex(1), Complex(0), Complex(0)}};
    CHECK(triple_distance(a, b) == doctest::Approx(0.0));
    CHECK(a.equals(b));
    CHECK(triple_distance(a, c) > 0.1);
    CHECK(triple_distance(a, c) <= 1.0);
  }
}
