#pragma once

#include <array>
#include <cmath>
#include <type_traits>
#include <vector>

#include "gt42/frame.hpp"
#include "gt42/pairs.hpp"

namespace gt42 {

// Point of the hypersimplex { x in [0,1]^4 : sum x = 2 }, the moment image.
template <class R>
struct MomentPoint {
  std::array<R, 4> x{};

  R& operator[](int i) { return x[i]; }
  const R& operator[](int i) const { return x[i]; }

  bool valid(double eps = kDefaultEps) const {
    R sum{};
    for (const R& v : x) sum += v;
    if constexpr (std::is_same_v<R, double>) {
      for (const R& v : x)
        if (v < -eps || v > 1 + eps) return false;
      return std::abs(sum - 2.0) <= eps;
    } else {
      for (const R& v : x)
        if (v < 0 || v > 1) return false;
      return sum == 2;
    }
  }
};

// Geometry of the moment image: a regular octahedron sitting in the plane
// x1+x2+x3+x4 = 2 with vertices delta_J.
struct Hypersimplex {
  static std::array<std::array<int, 4>, kNumPairs> vertices() {
    std::array<std::array<int, 4>, kNumPairs> v;
    for (int k = 0; k < kNumPairs; ++k) v[k] = delta(k);
    return v;
  }
  // Pairs of vertices joined by an edge: all non-antipodal pairs (12 of them).
  static std::vector<std::array<int, 2>> edges() {
    std::vector<std::array<int, 2>> e;
    for (int i = 0; i < kNumPairs; ++i)
      for (int j = i + 1; j < kNumPairs; ++j)
        if (j != complement_index(i)) e.push_back({i, j});
    return e;
  }
  // The eight triangular facets x_i = 1 and x_i = 0.
  static std::vector<std::array<int, 3>> facets() {
    std::vector<std::array<int, 3>> f;
    for (int i = 1; i <= 4; ++i) {
      std::array<int, 3> star{}, costar{};
      int s = 0, c = 0;
      for (int k = 0; k < kNumPairs; ++k)
        (kPairs[k].contains(i) ? star[s++] : costar[c++]) = k;
      f.push_back(star);
      f.push_back(costar);
    }
    return f;
  }
};

// Weighted barycenter of hypersimplex vertices: sum w_k delta_k / sum w_k.
template <class R>
MomentPoint<R> moment_from_weights(const std::array<R, kNumPairs>& w) {
  R total{};
  for (const R& v : w) total += v;
  if (total == 0) throw ZeroVectorError();
  MomentPoint<R> out;
  for (int k = 0; k < kNumPairs; ++k) {
    const auto d = delta(k);
    for (int i = 0; i < 4; ++i)
      if (d[i]) out[i] += w[k];
  }
  for (int i = 0; i < 4; ++i) out[i] /= total;
  return out;
}

// Moment map of the torus action on G(4,2) in Plücker coordinates.
template <class S>
MomentPoint<RealOf<S>> moment_g42(const Plucker<S>& p) {
  std::array<RealOf<S>, kNumPairs> w;
  for (int k = 0; k < kNumPairs; ++k) w[k] = ScalarTraits<S>::abs_sq(p[k]);
  return moment_from_weights(w);
}

// Moment map of the torus action on CP^5; same barycentric formula on the
// six homogeneous coordinates.
template <class S>
MomentPoint<RealOf<S>> moment_cp5(const std::array<S, kNumPairs>& z) {
  std::array<RealOf<S>, kNumPairs> w;
  for (int k = 0; k < kNumPairs; ++k) w[k] = ScalarTraits<S>::abs_sq(z[k]);
  return moment_from_weights(w);
}

// Orthonormalizes the frame columns (modified Gram-Schmidt, larger column
// first) and returns diag(A A^H), which equals the moment map of the point.
// Floating-point scalars only: normalization needs square roots.
template <class S>
  requires(!ScalarTraits<S>::exact)
MomentPoint<double> diag_projection(const Frame<S>& f, double eps = kDefaultEps) {
  using T = ScalarTraits<S>;
  std::array<S, 4> x, y;
  for (int r = 0; r < 4; ++r) {
    x[r] = f(r, 0);
    y[r] = f(r, 1);
  }
  auto dot = [](const std::array<S, 4>& a, const std::array<S, 4>& b) {
    S s{};
    for (int r = 0; r < 4; ++r) s += T::conj(a[r]) * b[r];
    return s;
  };
  auto norm_sq = [&](const std::array<S, 4>& a) {
    double s = 0;
    for (int r = 0; r < 4; ++r) s += T::abs_sq(a[r]);
    return s;
  };
  if (norm_sq(y) > norm_sq(x)) std::swap(x, y);
  const double nx = norm_sq(x);
  if (nx == 0) throw RankDeficientError();
  const double inv_nx = 1.0 / std::sqrt(nx);
  for (auto& v : x) v = v * S(inv_nx);
  const S proj = dot(x, y);
  for (int r = 0; r < 4; ++r) y[r] = y[r] - proj * x[r];
  const double ny = norm_sq(y);
  if (is_zero_rel<S>(ny, nx, eps)) throw RankDeficientError();
  const double inv_ny = 1.0 / std::sqrt(ny);
  for (auto& v : y) v = v * S(inv_ny);

  MomentPoint<double> out;
  for (int r = 0; r < 4; ++r) out[r] = T::abs_sq(x[r]) + T::abs_sq(y[r]);
  return out;
}

// ---------------------------------------------------------------------------
// Cone factorization of the moment map over one chart.
//
// Writing m = a1 a4 - a2 a3 for the residual minor of chart coordinates and
//   V1 = delta13 - delta12, V2 = delta14 - delta12,
//   V3 = delta23 - delta12, V4 = delta24 - delta12, V5 = delta34 - delta12,
// the chart moment map factors through the cone map
//   xi(a) = kappa0 * ( |a3|, sqrt(|a4|^2 + |m|^2), sqrt(|a1|^2 + |m|^2), |a2| )
// with kappa0^2 = 1 / (1 + sum |a_i|^2 + |m|^2), followed by
//   eta(x) = delta12 + sum_j x_j^2 V_j.
// V5 = V2 + V3 = V1 + V4 makes eta well defined on the cone spanned by the
// model weight vectors below. Other charts reduce to M12 by row permutation.
struct ConeCoordsReport {
  ChartId chart;
  std::array<std::array<int, 3>, 4> weights;  // model weight vectors
  std::array<double, 4> xi{};
  double residual = 0;  // || eta(xi(a)) - mu(X) ||_inf
};

inline constexpr std::array<std::array<int, 3>, 4> kConeModelWeights{
    std::array<int, 3>{1, 0, 0}, std::array<int, 3>{0, 1, 0},
    std::array<int, 3>{0, 0, 1}, std::array<int, 3>{-1, 1, 1}};

template <class S>
  requires(!ScalarTraits<S>::exact)
ConeCoordsReport cone_factorization_check(const ChartCoords<S>& cc) {
  using T = ScalarTraits<S>;
  // Align the chart to M12 by a row permutation; moment coordinates permute
  // the same way, so the residual is computed in aligned coordinates.
  const Frame<S> aligned = reconstruct(cc).rows_permuted(chart_alignment_permutation(cc.chart));
  const MomentPoint<double> mu = moment_g42(plucker_coordinates(aligned));

  const S m = cc.a[0] * cc.a[3] - cc.a[1] * cc.a[2];
  const double q1 = T::abs_sq(cc.a[0]), q2 = T::abs_sq(cc.a[1]);
  const double q3 = T::abs_sq(cc.a[2]), q4 = T::abs_sq(cc.a[3]);
  const double qm = T::abs_sq(m);
  const double kappa0 = 1.0 / std::sqrt(1.0 + q1 + q2 + q3 + q4 + qm);

  ConeCoordsReport rep;
  rep.chart = cc.chart;
  rep.weights = kConeModelWeights;
  rep.xi = {kappa0 * std::sqrt(q3), kappa0 * std::sqrt(q4 + qm),
            kappa0 * std::sqrt(q1 + qm), kappa0 * std::sqrt(q2)};

  // eta(xi): start at delta12 and add x_j^2 V_j.
  static constexpr int kVPairs[4] = {1, 2, 3, 4};  // pairs 13, 14, 23, 24
  std::array<double, 4> pt{1, 1, 0, 0};
  for (int j = 0; j < 4; ++j) {
    const double c = rep.xi[j] * rep.xi[j];
    const auto d = delta(kVPairs[j]);
    for (int i = 0; i < 4; ++i) pt[i] += c * (d[i] - (i < 2 ? 1 : 0));
  }
  double res = 0;
  for (int i = 0; i < 4; ++i) res = std::max(res, std::abs(pt[i] - mu[i]));
  rep.residual = res;
  return rep;
}

}  // namespace gt42
