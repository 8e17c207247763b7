#include "gt42/morse.hpp"

#include <cmath>

namespace gt42 {

double morse_value(const MomentPoint<double>& mu, const std::array<double, 4>& nu) {
  double h = 0;
  for (int i = 0; i < 4; ++i) h += mu.x[i] * nu[i];
  return h;
}

double chart_morse_value(ChartId chart, const std::array<Complex, 4>& a,
                         const std::array<double, 4>& nu) {
  const Frame<Complex> f = reconstruct(ChartCoords<Complex>{chart, a});
  return morse_value(f, nu);
}

MorseGradientReport morse_gradient_check(ChartId chart, const std::array<Complex, 4>& a,
                                         const std::array<double, 4>& nu) {
  MorseGradientReport r;
  r.chart = chart;
  r.value = chart_morse_value(chart, a, nu);
  r.at_origin = true;
  for (const Complex& v : a)
    if (std::abs(v) != 0.0) r.at_origin = false;

  auto displaced = [&](int coord, double step) {
    std::array<Complex, 4> b = a;
    const int idx = coord / 2;
    if (coord % 2 == 0)
      b[idx] += Complex(step, 0);
    else
      b[idx] += Complex(0, step);
    return chart_morse_value(chart, b, nu);
  };

  const double hg = 1e-5;
  for (int c = 0; c < 8; ++c) {
    r.gradient[c] = (displaced(c, hg) - displaced(c, -hg)) / (2 * hg);
    r.grad_norm = std::max(r.grad_norm, std::abs(r.gradient[c]));
  }

  const double hh = 1e-4;
  for (int c = 0; c < 8; ++c)
    r.hessian_diag[c] = (displaced(c, hh) - 2 * r.value + displaced(c, -hh)) / (hh * hh);
  for (int i = 0; i < 4; ++i)
    r.hessian_pairs[i] = 0.5 * (r.hessian_diag[2 * i] + r.hessian_diag[2 * i + 1]);
  return r;
}

Frame<Complex> fixed_point_frame(int pair_idx) {
  const IndexPair J = kPairs[pair_idx];
  Frame<Complex> f;
  f.m.fill(Complex(0, 0));
  f.m[2 * (J.a - 1) + 0] = Complex(1, 0);
  f.m[2 * (J.b - 1) + 1] = Complex(1, 0);
  return f;
}

MorseReport build_morse_report(const std::array<double, 4>& nu) {
  MorseReport rep;
  rep.nu = nu;
  for (int k = 0; k < kNumPairs; ++k)
    rep.critical_values[k] = morse_value(fixed_point_frame(k), nu);
  rep.values_distinct = true;
  for (int i = 0; i < kNumPairs; ++i)
    for (int j = i + 1; j < kNumPairs; ++j)
      if (std::abs(rep.critical_values[i] - rep.critical_values[j]) < 1e-9)
        rep.values_distinct = false;

  rep.nondegenerate = true;
  const std::array<Complex, 4> origin{};
  for (int k = 0; k < kNumPairs; ++k) {
    const MorseGradientReport g = morse_gradient_check(ChartId{k}, origin, nu);
    rep.origin_grad_norm[k] = g.grad_norm;
    rep.origin_hessian_pairs[k] = g.hessian_pairs;
    for (double h : g.hessian_pairs)
      if (std::abs(h) < 1e-3) rep.nondegenerate = false;
  }
  return rep;
}

}  // namespace gt42
