#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gt42/frame.hpp"
#include "gt42/strata.hpp"

namespace gt42 {

// Point of the projective parameter line (CP^1, or RP^1 for real scalars),
// stored as an unnormalized ratio num : den.
template <class S>
struct ProjectiveParam {
  S num{}, den{};

  static ProjectiveParam zero() { return {ScalarTraits<S>::from_int(0), ScalarTraits<S>::from_int(1)}; }
  static ProjectiveParam one() { return {ScalarTraits<S>::from_int(1), ScalarTraits<S>::from_int(1)}; }
  static ProjectiveParam infinity() { return {ScalarTraits<S>::from_int(1), ScalarTraits<S>::from_int(0)}; }

  bool is_infinite(double eps = kDefaultEps) const {
    const RealOf<S> scale = std::max(ScalarTraits<S>::abs_sq(num), ScalarTraits<S>::abs_sq(den));
    return is_zero_rel<S>(ScalarTraits<S>::abs_sq(den), scale, eps);
  }

  // Affine value; only meaningful when !is_infinite().
  S affine() const { return num / den; }

  bool equals(const ProjectiveParam& o, double eps = kDefaultEps) const {
    const S cross = num * o.den - o.num * den;
    const RealOf<S> scale =
        std::max(ScalarTraits<S>::abs_sq(num), ScalarTraits<S>::abs_sq(den)) *
        std::max(ScalarTraits<S>::abs_sq(o.num), ScalarTraits<S>::abs_sq(o.den));
    return is_zero_rel<S>(ScalarTraits<S>::abs_sq(cross), scale, eps);
  }
};

// Chordal distance on CP^1; bounded by 1, zero exactly on equal points.
inline double chordal_distance(const ProjectiveParam<Complex>& a, const ProjectiveParam<Complex>& b) {
  const double na = std::sqrt(std::norm(a.num) + std::norm(a.den));
  const double nb = std::sqrt(std::norm(b.num) + std::norm(b.den));
  return std::abs(a.num * b.den - b.num * a.den) / (na * nb);
}

// Cross-ratio style orbit parameter, in the M12 chart convention:
//   c = (p23 * p14) : (p13 * p24).
// Both products vanish exactly on strata of dimension <= 4, where the
// parameter carries no information; that case is reported as nullopt
// ("indeterminate") rather than as an arbitrary point of CP^1.
template <class S>
std::optional<ProjectiveParam<S>> cross_ratio(const Plucker<S>& p, double eps = kDefaultEps) {
  const S num = p[3] * p[2];  // p23 * p14
  const S den = p[1] * p[4];  // p13 * p24
  const RealOf<S> scale = p.max_abs_sq() * p.max_abs_sq();
  const bool num0 = is_zero_rel<S>(ScalarTraits<S>::abs_sq(num), scale, eps);
  const bool den0 = is_zero_rel<S>(ScalarTraits<S>::abs_sq(den), scale, eps);
  if (num0 && den0) return std::nullopt;
  return ProjectiveParam<S>{num, den};
}

template <class S>
std::optional<ProjectiveParam<S>> cross_ratio(const Frame<S>& f, double eps = kDefaultEps) {
  return cross_ratio(plucker_coordinates(f, eps), eps);
}

// ---------------------------------------------------------------------------
// Orbits of the torus action restricted to one affine chart. With chart
// coordinates a = (a1,a2,a3,a4), the orbit through a is determined by the set
// I of nonvanishing coordinates, plus the value c = a1 a4 / (a2 a3) when all
// four are nonzero (the orbit then lies on the hypersurface a1 a4 = c a2 a3).
enum class OrbitKind { FixedPoint, CStar, Hypersurface };

template <class S>
struct OrbitDescriptor {
  ChartId chart;
  OrbitKind kind = OrbitKind::FixedPoint;
  std::bitset<4> I;  // indices (0-based) of nonvanishing chart coordinates
  std::optional<ProjectiveParam<S>> param;  // set for Hypersurface
  int dim_real = 0;

  std::vector<int> index_list() const {
    std::vector<int> v;
    for (int i = 0; i < 4; ++i)
      if (I[i]) v.push_back(i + 1);
    return v;
  }
};

template <class S>
OrbitDescriptor<S> orbit_descriptor(const ChartCoords<S>& cc, double eps = kDefaultEps) {
  using T = ScalarTraits<S>;
  OrbitDescriptor<S> d;
  d.chart = cc.chart;
  // Chart-normalized frames contain unit entries, so magnitudes are measured
  // against max(1, |a|_max).
  RealOf<S> scale = T::abs_sq(T::from_int(1));
  for (const S& a : cc.a) scale = std::max(scale, T::abs_sq(a));
  for (int i = 0; i < 4; ++i) d.I[i] = !is_zero_rel<S>(T::abs_sq(cc.a[i]), scale, eps);
  if (d.I.all()) {
    d.kind = OrbitKind::Hypersurface;
    d.param = ProjectiveParam<S>{cc.a[0] * cc.a[3], cc.a[1] * cc.a[2]};
    d.dim_real = 6;
  } else if (d.I.any()) {
    d.kind = OrbitKind::CStar;
    d.dim_real = 2 * int(d.I.count());
  } else {
    d.kind = OrbitKind::FixedPoint;
    d.dim_real = 0;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Transition of the hypersurface parameter between charts. Each chart's
// parameter is an integral projective function of (q2 : q3), where
// q2 = p13 p24 and q3 = p14 p23; composing one such map with the inverse of
// another gives an integer Möbius transformation. For M12 -> M13 this is
// d = c / (c - 1).
template <class S>
ProjectiveParam<S> chart_param_transition(const ProjectiveParam<S>& c, ChartId from, ChartId to) {
  // Parameter as a function of (q2, q3), by chart class:
  //   {12},{34}: (q3 : q2)      {13},{24}: (q3 : q3 - q2)   {14},{23}: (q2 : q2 - q3)
  auto chart_class = [](ChartId id) {
    const int k = id.pair;
    return (k == 0 || k == 5) ? 0 : (k == 1 || k == 4) ? 1 : 2;
  };
  static constexpr int fwd[3][4] = {{0, 1, 1, 0}, {0, 1, -1, 1}, {1, 0, 1, -1}};
  static constexpr int inv[3][4] = {{0, 1, 1, 0}, {1, -1, 1, 0}, {1, 0, 1, -1}};
  const int* A = inv[chart_class(from)];
  const int* B = fwd[chart_class(to)];
  // T = B * A, applied to (num, den).
  const long t00 = B[0] * A[0] + B[1] * A[2], t01 = B[0] * A[1] + B[1] * A[3];
  const long t10 = B[2] * A[0] + B[3] * A[2], t11 = B[2] * A[1] + B[3] * A[3];
  auto scaled = [](const S& v, long k) { return v * ScalarTraits<S>::from_int(k); };
  return ProjectiveParam<S>{scaled(c.num, t00) + scaled(c.den, t01),
                            scaled(c.num, t10) + scaled(c.den, t11)};
}

// ---------------------------------------------------------------------------
// Limit value of the M12-convention parameter on boundary strata.
enum class BoundaryParam { Zero, One, Infinity, Any };

inline const char* boundary_param_name(BoundaryParam b) {
  switch (b) {
    case BoundaryParam::Zero: return "0";
    case BoundaryParam::One: return "1";
    case BoundaryParam::Infinity: return "inf";
    case BoundaryParam::Any: return "any";
  }
  return "?";
}

BoundaryParam boundary_parameter(const Stratum& s);

inline ProjectiveParam<Complex> boundary_param_value(BoundaryParam b) {
  switch (b) {
    case BoundaryParam::Zero: return ProjectiveParam<Complex>::zero();
    case BoundaryParam::One: return ProjectiveParam<Complex>::one();
    default: return ProjectiveParam<Complex>::infinity();
  }
}

// ---------------------------------------------------------------------------
// Topology of stratum closures.
enum class ClosureKind { Point, CP1, CP2, CP1xCP1, SingularToric6 };

struct ClosureReport {
  Stratum stratum;
  ClosureKind kind = ClosureKind::Point;
  int singular_point_count = 0;
  std::string description;
};

ClosureReport classify_closure(const Stratum& s);

// Orbits in the closure of a chart orbit, besides the orbit itself. For the
// dense hypersurface orbits the boundary omits the two coordinate pairs
// {1,4} and {2,3} that the hypersurface equation excludes.
template <class S>
std::vector<OrbitDescriptor<S>> closure_boundary(const OrbitDescriptor<S>& d) {
  std::vector<OrbitDescriptor<S>> out;
  auto push_cstar = [&](std::initializer_list<int> idx) {
    OrbitDescriptor<S> b;
    b.chart = d.chart;
    if (idx.size() == 0) {
      b.kind = OrbitKind::FixedPoint;
    } else {
      b.kind = OrbitKind::CStar;
      for (int i : idx) b.I.set(i - 1);
      b.dim_real = 2 * int(b.I.count());
    }
    out.push_back(b);
  };
  switch (d.kind) {
    case OrbitKind::FixedPoint:
      break;
    case OrbitKind::Hypersurface:
      push_cstar({1, 2});
      push_cstar({1, 3});
      push_cstar({2, 4});
      push_cstar({3, 4});
      push_cstar({1});
      push_cstar({2});
      push_cstar({3});
      push_cstar({4});
      push_cstar({});
      break;
    case OrbitKind::CStar: {
      // Proper nonempty subsets, larger first, then the fixed point.
      std::vector<std::bitset<4>> subs;
      const unsigned full = unsigned(d.I.to_ulong());
      for (unsigned m = full; m > 0; m = (m - 1) & full)
        if (m != full) subs.push_back(std::bitset<4>(m));
      std::sort(subs.begin(), subs.end(), [](std::bitset<4> a, std::bitset<4> b) {
        if (a.count() != b.count()) return a.count() > b.count();
        return a.to_ulong() < b.to_ulong();
      });
      for (const auto& s : subs) {
        OrbitDescriptor<S> b;
        b.chart = d.chart;
        b.kind = OrbitKind::CStar;
        b.I = s;
        b.dim_real = 2 * int(s.count());
        out.push_back(b);
      }
      push_cstar({});
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Local normal form of the compact-torus quotient near a point, keyed by the
// dimension k of the polytope of the point's stratum (equivalently by the
// stabilizer: k = 4 - dim stabilizer subtorus).
enum class LocalModelKind {
  Smooth,            // k = 3
  D2xConeS2,         // k = 2
  D1xConeS5modT2,    // k = 1
  ConeS7modT3,       // k = 0
  RealSmooth,        // real form, k = 3
  D1xConeRP1,        // real form, k = 2: D^2 x cone(RP^1)
  D1xConeS2modZ2sq,  // real form, k = 1
  ConeS3modZ2cube    // real form, k = 0
};

const char* local_model_name(LocalModelKind k);

struct LocalModelReport {
  int k = 3;  // dim of the polytope = compact-orbit dimension
  int stabilizer_dim = 1;
  LocalModelKind model = LocalModelKind::Smooth;
};

LocalModelReport local_model(ZeroPattern pattern, bool real_form = false);

}  // namespace gt42
