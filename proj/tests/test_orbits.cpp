#include <doctest.h>

#include <set>

#include "gt42/orbits.hpp"
#include "gt42/random.hpp"

using namespace gt42;

namespace {

ZeroPattern make_pattern(std::initializer_list<const char*> pairs) {
  ZeroPattern p;
  for (const char* s : pairs) p.set(parse_pair(s));
  return p;
}

}  // namespace

TEST_SUITE("orbits") {
  TEST_CASE("cross-ratio of the reference dense-stratum frame") {
    const auto f = stratum_witness<GaussianRational>(ZeroPattern(63));
    const auto c = cross_ratio(plucker_coordinates(f));
    REQUIRE(c.has_value());
    // p23 p14 = -2, p13 p24 = -1.
    CHECK(c->affine() == GaussianRational(2));
    CHECK_FALSE(c->is_infinite());
  }

  TEST_CASE("cross-ratio is a torus and GL(2) invariant") {
    Rng rng(59);
    for (int i = 0; i < 60; ++i) {
      const auto f = random_main_stratum_frame<GaussianRational>(rng);
      const auto c = cross_ratio(f);
      REQUIRE(c.has_value());
      const auto moved =
          torus_act(random_torus_element<GaussianRational>(rng), f)
              .right_multiplied(random_gl2<GaussianRational>(rng));
      const auto d = cross_ratio(moved);
      REQUIRE(d.has_value());
      CHECK(c->equals(*d));
    }
  }

  TEST_CASE("cross-ratio is indeterminate exactly off the antipodal strata") {
    // No antipodal vertex pair -> both products vanish.
    for (auto pat : {make_pattern({"12"}), make_pattern({"12", "13"}),
                     make_pattern({"14", "24", "34"})}) {
      const auto f = stratum_witness<GaussianRational>(pat);
      CHECK_FALSE(cross_ratio(f).has_value());
    }
    // Squares keep exactly one product: parameter 0, 1 or infinity.
    const auto sq_zero = cross_ratio(
        stratum_witness<GaussianRational>(make_pattern({"12", "13", "24", "34"})));
    REQUIRE(sq_zero.has_value());
    CHECK(sq_zero->equals(ProjectiveParam<GaussianRational>::zero()));
    const auto sq_inf = cross_ratio(
        stratum_witness<GaussianRational>(make_pattern({"12", "14", "23", "34"})));
    REQUIRE(sq_inf.has_value());
    CHECK(sq_inf->is_infinite());
    const auto sq_one = cross_ratio(
        stratum_witness<GaussianRational>(make_pattern({"13", "14", "23", "24"})));
    REQUIRE(sq_one.has_value());
    CHECK(sq_one->equals(ProjectiveParam<GaussianRational>::one()));
  }

  TEST_CASE("orbit descriptors by vanishing chart coordinates") {
    ChartCoords<Complex> cc;
    cc.chart = ChartId{0};
    cc.a = {Complex(2), Complex(3), Complex(5), Complex(7)};
    auto d = orbit_descriptor(cc);
    CHECK(d.kind == OrbitKind::Hypersurface);
    CHECK(d.dim_real == 6);
    REQUIRE(d.param.has_value());
    CHECK(std::abs(d.param->affine() - Complex(14.0 / 15.0)) < 1e-12);
    CHECK(d.index_list() == std::vector<int>{1, 2, 3, 4});

    cc.a = {Complex(2), Complex(0), Complex(0), Complex(7)};
    d = orbit_descriptor(cc);
    CHECK(d.kind == OrbitKind::CStar);
    CHECK(d.dim_real == 4);
    CHECK(d.index_list() == std::vector<int>{1, 4});

    cc.a = {Complex(0), Complex(0), Complex(0), Complex(0)};
    d = orbit_descriptor(cc);
    CHECK(d.kind == OrbitKind::FixedPoint);
    CHECK(d.dim_real == 0);
  }

  TEST_CASE("parameter transition between charts is the exact Moebius law") {
    // M12 -> M13 sends c to c/(c-1).
    const ProjectiveParam<GaussianRational> three{GaussianRational(3), GaussianRational(1)};
    const auto image = chart_param_transition(three, ChartId{0}, ChartId{1});
    CHECK(image.affine() == GaussianRational{Rational(3, 2)});
    // c = 0 and c = 1 map to 0 and infinity.
    const auto z = chart_param_transition(ProjectiveParam<GaussianRational>::zero(), ChartId{0}, ChartId{1});
    CHECK(z.equals(ProjectiveParam<GaussianRational>::zero()));
    const auto o = chart_param_transition(ProjectiveParam<GaussianRational>::one(), ChartId{0}, ChartId{1});
    CHECK(o.is_infinite());
  }

  TEST_CASE("parameter transition agrees with recomputing in the target chart") {
    Rng rng(61);
    for (int i = 0; i < 40; ++i) {
      const auto f = random_main_stratum_frame<GaussianRational>(rng);
      for (int from = 0; from < kNumPairs; ++from)
        for (int to = 0; to < kNumPairs; ++to) {
          const auto a = orbit_descriptor(to_chart(f, ChartId{from}));
          const auto b = orbit_descriptor(to_chart(f, ChartId{to}));
          REQUIRE(a.param.has_value());
          REQUIRE(b.param.has_value());
          CHECK(chart_param_transition(*a.param, ChartId{from}, ChartId{to}).equals(*b.param));
        }
    }
  }

  TEST_CASE("boundary parameter by stratum") {
    auto param_of = [](std::initializer_list<const char*> missing) {
      ZeroPattern pat(63);
      for (const char* s : missing) pat.reset(parse_pair(s));
      const AdmissiblePolytope p = classify_pattern(pat);
      return boundary_parameter(Stratum{p, stratum_dimension(p)});
    };
    CHECK(param_of({"14"}) == BoundaryParam::Zero);
    CHECK(param_of({"23"}) == BoundaryParam::Zero);
    CHECK(param_of({"13"}) == BoundaryParam::Infinity);
    CHECK(param_of({"24"}) == BoundaryParam::Infinity);
    CHECK(param_of({"12"}) == BoundaryParam::One);
    CHECK(param_of({"34"}) == BoundaryParam::One);
    CHECK(param_of({"14", "23"}) == BoundaryParam::Zero);
    CHECK(param_of({"13", "24"}) == BoundaryParam::Infinity);
    CHECK(param_of({"12", "34"}) == BoundaryParam::One);
    // 2-dimensional strata carry no limit constraint.
    const auto tri = classify_pattern(make_pattern({"14", "24", "34"}));
    CHECK(boundary_parameter(Stratum{tri, 4}) == BoundaryParam::Any);
    const auto octa = classify_pattern(ZeroPattern(63));
    CHECK_THROWS_AS(boundary_parameter(Stratum{octa, 8}), UnknownStratumError);
    CHECK(boundary_param_value(BoundaryParam::Zero).equals(ProjectiveParam<Complex>::zero()));
    CHECK(boundary_param_value(BoundaryParam::One).equals(ProjectiveParam<Complex>::one()));
    CHECK(boundary_param_value(BoundaryParam::Infinity).is_infinite());
  }

  TEST_CASE("hypersurface orbit closure: eight sub-orbits plus the fixed point") {
    ChartCoords<Complex> cc;
    cc.chart = ChartId{0};
    cc.a = {Complex(1), Complex(2), Complex(3), Complex(4)};
    const auto d = orbit_descriptor(cc);
    const auto boundary = closure_boundary(d);
    REQUIRE(boundary.size() == 9);
    std::set<unsigned long> masks;
    int fixed = 0;
    for (const auto& b : boundary) {
      masks.insert(b.I.to_ulong());
      if (b.kind == OrbitKind::FixedPoint) ++fixed;
      CHECK(b.dim_real == 2 * int(b.I.count()));
    }
    CHECK(fixed == 1);
    // I-sets {1,2},{1,3},{2,4},{3,4}, singletons, and the origin; the pairs
    // {1,4} and {2,3} are excluded by the hypersurface equation.
    const std::set<unsigned long> expected{0b0011, 0b0101, 0b1010, 0b1100,
                                           0b0001, 0b0010, 0b0100, 0b1000, 0};
    CHECK(masks == expected);
  }

  TEST_CASE("lower orbit closures enumerate proper subsets") {
    ChartCoords<Complex> cc;
    cc.chart = ChartId{2};
    cc.a = {Complex(1), Complex(2), Complex(0), Complex(0)};
    const auto boundary = closure_boundary(orbit_descriptor(cc));
    REQUIRE(boundary.size() == 3);
    CHECK(boundary[0].I.to_ulong() == 0b0001);
    CHECK(boundary[1].I.to_ulong() == 0b0010);
    CHECK(boundary[2].kind == OrbitKind::FixedPoint);
    const auto fixed = closure_boundary(OrbitDescriptor<Complex>{});
    CHECK(fixed.empty());
  }

  TEST_CASE("closure topology by polytope kind") {
    auto closure_of = [](ZeroPattern pat) {
      const auto p = classify_pattern(pat);
      return classify_closure(Stratum{p, stratum_dimension(p)});
    };
    CHECK(closure_of(make_pattern({"12"})).kind == ClosureKind::Point);
    CHECK(closure_of(make_pattern({"12", "13"})).kind == ClosureKind::CP1);
    CHECK(closure_of(make_pattern({"14", "24", "34"})).kind == ClosureKind::CP2);
    CHECK(closure_of(make_pattern({"13", "14", "23", "24"})).kind == ClosureKind::CP1xCP1);
    const auto pyramid = closure_of(ZeroPattern(63) & ~make_pattern({"12"}));
    CHECK(pyramid.kind == ClosureKind::SingularToric6);
    CHECK(pyramid.singular_point_count == 1);
    const auto octa = closure_of(ZeroPattern(63));
    CHECK(octa.kind == ClosureKind::SingularToric6);
    CHECK(octa.singular_point_count == 6);
  }

  TEST_CASE("local slice models by polytope dimension") {
    auto model_of = [](ZeroPattern pat, bool real_form) {
      return local_model(pat, real_form).model;
    };
    CHECK(model_of(ZeroPattern(63), false) == LocalModelKind::Smooth);
    CHECK(model_of(make_pattern({"13", "14", "23", "24"}), false) == LocalModelKind::D2xConeS2);
    CHECK(model_of(make_pattern({"12", "13"}), false) == LocalModelKind::D1xConeS5modT2);
    CHECK(model_of(make_pattern({"12"}), false) == LocalModelKind::ConeS7modT3);
    CHECK(model_of(ZeroPattern(63), true) == LocalModelKind::RealSmooth);
    CHECK(model_of(make_pattern({"12"}), true) == LocalModelKind::ConeS3modZ2cube);
    CHECK(local_model(ZeroPattern(63), false).stabilizer_dim == 1);
    CHECK(local_model(make_pattern({"12"}), false).stabilizer_dim == 4);
  }

  TEST_CASE("chordal distance separates parameters") {
    const ProjectiveParam<Complex> a{Complex(1), Complex(1)};
    const ProjectiveParam<Complex> b{Complex(2), Complex(1)};
    CHECK(chordal_distance(a, a) == doctest::Approx(0.0));
    CHECK(chordal_distance(a, b) > 0.1);
    CHECK(chordal_distance(a, b) <= 1.0);
    const ProjectiveParam<Complex> scaled{Complex(5), Complex(5)};
    CHECK(chordal_distance(a, scaled) == doctest::Approx(0.0));
  }
}
