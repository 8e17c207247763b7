#include <doctest.h>

#include <cmath>
#include <set>

#include "gt42/morse.hpp"
#include "gt42/random.hpp"

using namespace gt42;

TEST_SUITE("morse") {
  TEST_CASE("heights of the six fixed points") {
    // nu = (1,2,4,8) gives pairwise distinct vertex heights.
    const std::array<double, 6> expected{3, 5, 9, 6, 10, 12};
    for (int k = 0; k < kNumPairs; ++k) {
      const Frame<Complex> f = fixed_point_frame(k);
      CHECK(morse_value(f) == doctest::Approx(expected[k]));
      // The fixed point is the chart origin of its own chart.
      const auto cc = to_chart(f, ChartId{k});
      for (const Complex& a : cc.a) CHECK(std::abs(a) == doctest::Approx(0.0));
      CHECK(chart_morse_value(ChartId{k}, cc.a) == doctest::Approx(expected[k]));
    }
    CHECK(std::set<double>(expected.begin(), expected.end()).size() == 6);
  }

  TEST_CASE("gradient vanishes at chart origins and only there") {
    Rng rng(97);
    for (int k = 0; k < kNumPairs; ++k) {
      const std::array<Complex, 4> origin{};
      const MorseGradientReport rep = morse_gradient_check(ChartId{k}, origin);
      CHECK(rep.at_origin);
      CHECK(rep.grad_norm <= 1e-6);
      for (int i = 0; i < 25; ++i) {
        std::array<Complex, 4> a;
        double big = 0;
        do {
          for (auto& v : a) v = random_scalar<Complex>(rng);
          big = 0;
          for (const auto& v : a) big = std::max(big, std::abs(v));
        } while (big < 0.5);
        CHECK(morse_gradient_check(ChartId{k}, a).grad_norm > 1e-6);
      }
    }
  }

  TEST_CASE("the hessian at each origin is diagonal with the height gaps") {
    const MorseReport rep = build_morse_report();
    CHECK(rep.values_distinct);
    CHECK(rep.nondegenerate);
    const std::array<double, 6> heights{3, 5, 9, 6, 10, 12};
    for (int k = 0; k < kNumPairs; ++k) {
      CHECK(rep.critical_values[k] == doctest::Approx(heights[k]));
      CHECK(rep.origin_grad_norm[k] <= 1e-6);
      // Slot i of chart k turns on exactly one other minor; the second
      // derivative is twice the height difference of the two vertices.
      for (int i = 0; i < 4; ++i) {
        // Identify the paired minor by an exact probe.
        ChartCoords<GaussianRational> probe;
        probe.chart = ChartId{k};
        probe.a[i] = GaussianRational(1);
        const auto pat = nonzero_pattern(plucker_coordinates(reconstruct(probe)));
        int other = -1;
        for (int j = 0; j < kNumPairs; ++j)
          if (pat[j] && j != k) other = j;
        REQUIRE(other >= 0);
        const double expect = 2.0 * (heights[other] - heights[k]);
        CHECK(std::abs(rep.origin_hessian_pairs[k][i] - expect) <= 1e-3);
      }
    }
  }

  TEST_CASE("index spectrum matches the Betti numbers of the manifold") {
    const MorseReport rep = build_morse_report();
    std::multiset<int> indices;
    for (int k = 0; k < kNumPairs; ++k) {
      int idx = 0;
      for (double h : rep.origin_hessian_pairs[k])
        if (h < 0) idx += 2;  // each complex slot contributes a real 2-plane
      indices.insert(idx);
    }
    CHECK(indices == std::multiset<int>{0, 2, 4, 4, 6, 8});
  }

  TEST_CASE("morse value at the central chart point") {
    // Unit-magnitude coordinates in M12: rows (1,0),(0,1),(1,0),(0,1).
    const std::array<Complex, 4> a{Complex(1), Complex(0), Complex(0), Complex(1)};
    CHECK(chart_morse_value(ChartId{0}, a) == doctest::Approx(7.5));
  }

  TEST_CASE("degenerate weights are detected") {
    const MorseReport rep = build_morse_report({1, 1, 1, 1});
    CHECK_FALSE(rep.values_distinct);
  }
}
