#pragma once

#include <cstdint>
#include <random>

#include "gt42/frame.hpp"
#include "gt42/strata.hpp"

namespace gt42 {

inline constexpr std::uint64_t kDefaultSeed = 42;

// Seeded generator: every sampled check owns one so the seed fully
// determines the run.
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  double gauss() {
    std::normal_distribution<double> n(0.0, 1.0);
    return n(eng);
  }
  double uniform() {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return u(eng);
  }
  long uniform_int(long lo, long hi) {
    std::uniform_int_distribution<long> u(lo, hi);
    return u(eng);
  }
};

template <class S>
S random_scalar(Rng& rng);

template <>
inline Complex random_scalar<Complex>(Rng& rng) {
  return Complex(rng.gauss(), rng.gauss());
}

template <>
inline double random_scalar<double>(Rng& rng) {
  return rng.gauss();
}

template <>
inline GaussianRational random_scalar<GaussianRational>(Rng& rng) {
  const Rational re(rng.uniform_int(-9, 9), rng.uniform_int(1, 5));
  const Rational im(rng.uniform_int(-9, 9), rng.uniform_int(1, 5));
  GaussianRational g{re, im};
  g.re.canonicalize();
  g.im.canonicalize();
  return g;
}

// Nonzero scalar of moderate magnitude (safe to divide by, keeps floating
// zero-tests unambiguous).
template <class S>
S random_unit_scale(Rng& rng) {
  if constexpr (ScalarTraits<S>::exact) {
    GaussianRational g{Rational(rng.uniform_int(1, 5), rng.uniform_int(1, 3)), 0};
    if (rng.uniform_int(0, 1)) g.im = g.re;
    if (rng.uniform_int(0, 1)) g.re = -g.re;
    g.re.canonicalize();
    g.im.canonicalize();
    return g;
  } else if constexpr (std::is_same_v<S, double>) {
    const double m = 0.5 + rng.uniform();
    return rng.uniform_int(0, 1) ? m : -m;
  } else {
    const double m = 0.5 + rng.uniform();
    const double t = 2 * 3.14159265358979323846 * rng.uniform();
    return Complex(m * std::cos(t), m * std::sin(t));
  }
}

template <class S>
Frame<S> random_frame(Rng& rng, double eps = kDefaultEps) {
  for (;;) {
    Frame<S> f;
    for (S& v : f.m) v = random_scalar<S>(rng);
    try {
      plucker_coordinates(f, eps);
      return f;
    } catch (const RankDeficientError&) {
      // resample (probability ~0, but exact zeros do occur in rational mode)
    }
  }
}

template <class S>
Frame<S> random_main_stratum_frame(Rng& rng, double eps = kDefaultEps) {
  for (;;) {
    Frame<S> f = random_frame<S>(rng, eps);
    if (nonzero_pattern(plucker_coordinates(f, eps), eps).all()) return f;
  }
}

// Orthonormal 4x2 frame via Gram-Schmidt on Gaussian columns.
template <class S>
  requires(!ScalarTraits<S>::exact)
Frame<S> random_orthonormal_frame(Rng& rng) {
  using T = ScalarTraits<S>;
  for (;;) {
    std::array<S, 4> x, y;
    for (int i = 0; i < 4; ++i) {
      x[i] = random_scalar<S>(rng);
      y[i] = random_scalar<S>(rng);
    }
    double nx = 0;
    for (int i = 0; i < 4; ++i) nx += double(T::abs_sq(x[i]));
    if (nx < 1e-6) continue;
    for (int i = 0; i < 4; ++i) x[i] = x[i] * S(1.0 / std::sqrt(nx));
    S dot{};
    for (int i = 0; i < 4; ++i) dot = dot + T::conj(x[i]) * y[i];
    for (int i = 0; i < 4; ++i) y[i] = y[i] - dot * x[i];
    double ny = 0;
    for (int i = 0; i < 4; ++i) ny += double(T::abs_sq(y[i]));
    if (ny < 1e-6) continue;
    for (int i = 0; i < 4; ++i) y[i] = y[i] * S(1.0 / std::sqrt(ny));
    Frame<S> f;
    for (int i = 0; i < 4; ++i) {
      f.m[2 * i + 0] = x[i];
      f.m[2 * i + 1] = y[i];
    }
    return f;
  }
}

template <class S>
TorusElement<S> random_torus_element(Rng& rng, bool unit_modulus = false) {
  TorusElement<S> t;
  for (int i = 0; i < 4; ++i) t.t[i] = random_unit_scale<S>(rng);
  if (unit_modulus) {
    if constexpr (std::is_same_v<S, Complex>) {
      for (int i = 0; i < 4; ++i) t.t[i] = t.t[i] / S(std::abs(t.t[i]));
    } else if constexpr (std::is_same_v<S, double>) {
      for (int i = 0; i < 4; ++i) t.t[i] = t.t[i] > 0 ? 1.0 : -1.0;
    } else {
      // Exact unit-modulus elements: the Gaussian-rational units.
      static const GaussianRational units[4] = {
          {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
      for (int i = 0; i < 4; ++i) t.t[i] = units[rng.uniform_int(0, 3)];
    }
  }
  return t;
}

// Invertible 2x2 matrix (row-major a,b,c,d) for the right GL(2) action.
template <class S>
std::array<S, 4> random_gl2(Rng& rng, double eps = kDefaultEps) {
  using T = ScalarTraits<S>;
  for (;;) {
    std::array<S, 4> g;
    for (S& v : g) v = random_scalar<S>(rng);
    const S det = g[0] * g[3] - g[1] * g[2];
    RealOf<S> scale{};
    for (const S& v : g) scale = std::max(scale, T::abs_sq(v));
    if (!is_zero_rel<S>(T::abs_sq(det), scale * scale, std::max(eps, 1e-3))) return g;
  }
}

// A random point of the stratum with the given coordinate pattern: move a
// fixed witness around by the stabilizer-free part of the group action
// (torus times GL(2) preserves the pattern exactly). The dense stratum is
// sampled directly so its orbit parameter actually varies.
template <class S>
Frame<S> random_point_in_stratum(ZeroPattern pattern, Rng& rng, double eps = kDefaultEps) {
  if (pattern.all()) {
    for (;;) {
      Frame<S> f = stratum_witness<S>(pattern);
      const TorusElement<S> t = random_torus_element<S>(rng);
      f = torus_act(t, f).right_multiplied(random_gl2<S>(rng, eps));
      // Perturb within the chart the witness lives in so the parameter is
      // not constant: re-draw chart coordinates around the witness image.
      ChartCoords<S> cc;
      try {
        cc = to_chart(f, ChartId{0}, eps);
      } catch (const NotInChartError&) {
        continue;
      }
      for (S& v : cc.a) v = v + random_scalar<S>(rng);
      Frame<S> g = reconstruct(cc);
      try {
        if (nonzero_pattern(plucker_coordinates(g, eps), eps) == pattern) return g;
      } catch (const RankDeficientError&) {
      }
    }
  }
  for (;;) {
    Frame<S> f = stratum_witness<S>(pattern);
    const TorusElement<S> t = random_torus_element<S>(rng);
    f = torus_act(t, f).right_multiplied(random_gl2<S>(rng, eps));
    try {
      if (nonzero_pattern(plucker_coordinates(f, eps), eps) == pattern) return f;
    } catch (const RankDeficientError&) {
    }
  }
}

}  // namespace gt42
