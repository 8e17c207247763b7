#pragma once

#include <array>

#include "gt42/moment.hpp"

namespace gt42 {

// Height function h = <mu(.), nu> on the Grassmannian. With these weights
// the six values h(delta_J) are pairwise distinct, which is what makes h a
// perfect separating function on the fixed-point set.
inline constexpr std::array<double, 4> kMorseNu = {1.0, 2.0, 4.0, 8.0};

double morse_value(const MomentPoint<double>& mu, const std::array<double, 4>& nu = kMorseNu);

template <class S>
  requires(!ScalarTraits<S>::exact)
double morse_value(const Frame<S>& f, const std::array<double, 4>& nu = kMorseNu) {
  return morse_value(moment_g42(plucker_coordinates(f)), nu);
}

// h o mu expressed in the real coordinates of one affine chart: the chart
// point a = (a1..a4) is varied over its 8 real components (re and im
// alternating), the frame is reconstructed, and h is evaluated.
double chart_morse_value(ChartId chart, const std::array<Complex, 4>& a,
                         const std::array<double, 4>& nu = kMorseNu);

struct MorseGradientReport {
  ChartId chart;
  double value = 0;
  std::array<double, 8> gradient{};      // central differences, step 1e-5
  double grad_norm = 0;                  // sup norm of the gradient
  std::array<double, 8> hessian_diag{};  // second central differences, step 1e-4
  std::array<double, 4> hessian_pairs{}; // averaged over each (re, im) pair
  bool at_origin = false;
};

MorseGradientReport morse_gradient_check(ChartId chart, const std::array<Complex, 4>& a,
                                         const std::array<double, 4>& nu = kMorseNu);

// Summary over the whole manifold: the critical values at the six torus
// fixed points (the coordinate planes), and the finite-difference behavior
// at each chart origin, where the fixed point sits.
struct MorseReport {
  std::array<double, 4> nu{};
  std::array<double, 6> critical_values{};           // indexed by coordinate pair
  bool values_distinct = false;
  std::array<double, 6> origin_grad_norm{};          // per chart
  std::array<std::array<double, 4>, 6> origin_hessian_pairs{};
  bool nondegenerate = false;                        // no Hessian entry near zero
};

MorseReport build_morse_report(const std::array<double, 4>& nu = kMorseNu);

// The torus fixed points: the six coordinate 2-planes.
Frame<Complex> fixed_point_frame(int pair_idx);

}  // namespace gt42
