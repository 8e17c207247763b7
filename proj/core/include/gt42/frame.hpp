#pragma once

#include <algorithm>
#include <array>
#include <bitset>
#include <optional>

#include "gt42/pairs.hpp"
#include "gt42/scalar.hpp"

namespace gt42 {

// A framed point of the Grassmannian G(4,2): a full-rank 4x2 matrix whose
// column span is the point. Stored row-major.
template <class S>
struct Frame {
  std::array<S, 8> m{};  // m[2*r + c], r in 0..3, c in 0..1

  S& operator()(int r, int c) { return m[2 * r + c]; }
  const S& operator()(int r, int c) const { return m[2 * r + c]; }

  static Frame from_rows(std::array<std::array<S, 2>, 4> rows) {
    Frame f;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 2; ++c) f(r, c) = rows[r][c];
    return f;
  }

  // 2x2 minor on rows r < s (0-based).
  S minor_rs(int r, int s) const {
    return (*this)(r, 0) * (*this)(s, 1) - (*this)(s, 0) * (*this)(r, 1);
  }

  // Right action of an invertible 2x2 matrix g = [[g00,g01],[g10,g11]]:
  // changes the frame, fixes the point. Every minor scales by det(g).
  Frame right_multiplied(const std::array<S, 4>& g) const {
    Frame out;
    for (int r = 0; r < 4; ++r) {
      out(r, 0) = (*this)(r, 0) * g[0] + (*this)(r, 1) * g[2];
      out(r, 1) = (*this)(r, 0) * g[1] + (*this)(r, 1) * g[3];
    }
    return out;
  }

  // Row permutation: result row r = this row sigma[r] (sigma 0-based).
  Frame rows_permuted(const std::array<int, 4>& sigma) const {
    Frame out;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 2; ++c) out(r, c) = (*this)(sigma[r], c);
    return out;
  }
};

// The six Plücker coordinates of a frame, in lexicographic pair order.
template <class S>
struct Plucker {
  std::array<S, kNumPairs> p{};

  S& operator[](int k) { return p[k]; }
  const S& operator[](int k) const { return p[k]; }

  RealOf<S> max_abs_sq() const {
    RealOf<S> m = ScalarTraits<S>::abs_sq(p[0]);
    for (int k = 1; k < kNumPairs; ++k) m = std::max(m, ScalarTraits<S>::abs_sq(p[k]));
    return m;
  }
};

// The defining quadric: p12*p34 - p13*p24 + p14*p23. Identically zero on
// Plücker vectors of frames.
template <class S>
S plucker_relation(const Plucker<S>& p) {
  return p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
}

template <class S>
Plucker<S> plucker_coordinates(const Frame<S>& f, double eps = kDefaultEps) {
  Plucker<S> p;
  RealOf<S> pmax{};
  for (int k = 0; k < kNumPairs; ++k) {
    p[k] = f.minor_rs(kPairs[k].a - 1, kPairs[k].b - 1);
    pmax = std::max(pmax, ScalarTraits<S>::abs_sq(p[k]));
  }
  // Rank test relative to the entry scale: minors are quadratic in entries.
  RealOf<S> emax{};
  for (const S& e : f.m) emax = std::max(emax, ScalarTraits<S>::abs_sq(e));
  if (is_zero_rel<S>(pmax, emax * emax, eps)) throw RankDeficientError();
  return p;
}

// Zero pattern of a Plücker (or CP^5) vector: the set of pairs with
// nonvanishing coordinate. Floating modes classify relative to the largest
// coordinate magnitude.
using ZeroPattern = std::bitset<kNumPairs>;

template <class S>
ZeroPattern nonzero_pattern(const std::array<S, kNumPairs>& z, double eps = kDefaultEps) {
  RealOf<S> scale = ScalarTraits<S>::abs_sq(z[0]);
  for (int k = 1; k < kNumPairs; ++k) scale = std::max(scale, ScalarTraits<S>::abs_sq(z[k]));
  ZeroPattern out;
  for (int k = 0; k < kNumPairs; ++k)
    out[k] = !is_zero_rel<S>(ScalarTraits<S>::abs_sq(z[k]), scale, eps);
  return out;
}

template <class S>
ZeroPattern nonzero_pattern(const Plucker<S>& p, double eps = kDefaultEps) {
  return nonzero_pattern<S>(p.p, eps);
}

// Projective equality: p and q are proportional. Floating comparison is
// relative to the largest products.
template <class S>
bool proportional(const Plucker<S>& p, const Plucker<S>& q, double eps = kDefaultEps) {
  const RealOf<S> scale = p.max_abs_sq() * q.max_abs_sq();
  for (int i = 0; i < kNumPairs; ++i)
    for (int j = i + 1; j < kNumPairs; ++j) {
      const S cross = p[i] * q[j] - p[j] * q[i];
      if (!is_zero_rel<S>(ScalarTraits<S>::abs_sq(cross), scale, eps)) return false;
    }
  return true;
}

// Element of the algebraic torus (C*)^4 (or its real form) acting on C^4 by
// coordinate scaling; frames transform row-wise.
template <class S>
struct TorusElement {
  std::array<S, 4> t{ScalarTraits<S>::from_int(1), ScalarTraits<S>::from_int(1),
                     ScalarTraits<S>::from_int(1), ScalarTraits<S>::from_int(1)};

  // Induced weight on pair k: t_a * t_b.
  S pair_weight(int k) const { return t[kPairs[k].a - 1] * t[kPairs[k].b - 1]; }
};

template <class S>
Frame<S> torus_act(const TorusElement<S>& t, const Frame<S>& f) {
  Frame<S> out = f;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 2; ++c) out(r, c) = t.t[r] * f(r, c);
  return out;
}

// Affine chart M_J of the Grassmannian: points whose minor on rows J is
// nonzero. With J = {i1 < i2} and complement {k1 < k2}, the normalized frame
// is
//     row i1 = (1, 0)      row k1 = (a1, a3)
//     row i2 = (0, 1)      row k2 = (a2, a4)
struct ChartId {
  int pair = 0;  // index into kPairs

  bool operator==(const ChartId&) const = default;

  IndexPair rows() const { return kPairs[pair]; }
  IndexPair free_rows() const { return complement(kPairs[pair]); }
  std::string name() const { return "M" + pair_name(pair); }
};

inline ChartId chart_by_pair(int a, int b) {
  const int k = pair_index(a, b);
  if (k < 0) throw InputError("no such chart");
  return ChartId{k};
}

template <class S>
struct ChartCoords {
  ChartId chart;
  std::array<S, 4> a{};  // (a1, a2, a3, a4) as in the chart layout above
};

template <class S>
ChartCoords<S> to_chart(const Frame<S>& f, ChartId chart, double eps = kDefaultEps) {
  const int i1 = chart.rows().a - 1, i2 = chart.rows().b - 1;
  const int k1 = chart.free_rows().a - 1, k2 = chart.free_rows().b - 1;
  const S det = f.minor_rs(i1, i2);
  const Plucker<S> p = plucker_coordinates(f);  // throws RankDeficient on rank < 2
  if (is_zero_rel<S>(ScalarTraits<S>::abs_sq(det), p.max_abs_sq(), eps))
    throw NotInChartError("point is not in chart " + chart.name() +
                          ": pivot minor vanishes");
  // Right-multiply by the inverse of the submatrix on rows J.
  const S a = f(i1, 0), b = f(i1, 1), c = f(i2, 0), d = f(i2, 1);
  const std::array<S, 4> inv{d / det, -b / det, -c / det, a / det};
  const Frame<S> g = f.right_multiplied(inv);
  ChartCoords<S> out;
  out.chart = chart;
  out.a = {g(k1, 0), g(k2, 0), g(k1, 1), g(k2, 1)};
  return out;
}

template <class S>
Frame<S> reconstruct(const ChartCoords<S>& cc) {
  const S zero = ScalarTraits<S>::from_int(0), one = ScalarTraits<S>::from_int(1);
  const int i1 = cc.chart.rows().a - 1, i2 = cc.chart.rows().b - 1;
  const int k1 = cc.chart.free_rows().a - 1, k2 = cc.chart.free_rows().b - 1;
  Frame<S> f;
  f(i1, 0) = one;
  f(i1, 1) = zero;
  f(i2, 0) = zero;
  f(i2, 1) = one;
  f(k1, 0) = cc.a[0];
  f(k1, 1) = cc.a[2];
  f(k2, 0) = cc.a[1];
  f(k2, 1) = cc.a[3];
  return f;
}

// Change of chart. Throws NotInChart when the target pivot minor vanishes;
// e.g. M12 coords with a3 = 0 are not visible from M13 (their P^13 is a3).
template <class S>
ChartCoords<S> chart_transition(const ChartCoords<S>& cc, ChartId to, double eps = kDefaultEps) {
  return to_chart(reconstruct(cc), to, eps);
}

// Permutation sigma with sigma(1,2,3,4) = (i1, i2, k1, k2) as 0-based array:
// moving rows by it carries chart M_J to chart M12.
inline std::array<int, 4> chart_alignment_permutation(ChartId chart) {
  return {chart.rows().a - 1, chart.rows().b - 1,
          chart.free_rows().a - 1, chart.free_rows().b - 1};
}

}  // namespace gt42
