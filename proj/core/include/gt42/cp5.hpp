#pragma once

#include <optional>
#include <vector>

#include "gt42/moment.hpp"
#include "gt42/orbits.hpp"
#include "gt42/strata.hpp"

namespace gt42 {

// Point of projective 5-space with coordinates indexed like Plucker
// positions: z0..z5 <-> 12, 13, 14, 23, 24, 34.
template <class S>
struct CP5Point {
  std::array<S, 6> z{};

  RealOf<S> max_abs_sq() const {
    RealOf<S> m{};
    for (const S& v : z) m = std::max(m, ScalarTraits<S>::abs_sq(v));
    return m;
  }
};

template <class S>
CP5Point<S> plucker_embed(const Plucker<S>& p) {
  return CP5Point<S>{p.p};
}

// The torus acts on CP^5 through the second symmetric power of its defining
// representation: coordinate {i,j} scales by t_i * t_j.
template <class S>
CP5Point<S> symmetric_square_act(const TorusElement<S>& t, const CP5Point<S>& z) {
  CP5Point<S> out;
  for (int k = 0; k < kNumPairs; ++k) out.z[k] = t.pair_weight(k) * z.z[k];
  return out;
}

template <class S>
ZeroPattern nonzero_pattern(const CP5Point<S>& z, double eps = kDefaultEps) {
  const RealOf<S> m = z.max_abs_sq();
  if (m == RealOf<S>{}) throw ZeroVectorError("CP5 point has all coordinates zero");
  ZeroPattern pat;
  for (int k = 0; k < kNumPairs; ++k)
    pat[k] = !is_zero_rel<S>(ScalarTraits<S>::abs_sq(z.z[k]), m, eps);
  return pat;
}

template <class S>
bool proportional(const CP5Point<S>& a, const CP5Point<S>& b, double eps = kDefaultEps) {
  return proportional(Plucker<S>{a.z}, Plucker<S>{b.z}, eps);
}

// Residual of the quadric z0 z5 + z2 z3 - z1 z4 = 0 cutting out the
// Grassmannian inside CP^5 (the Plucker relation in these coordinates).
template <class S>
S quadric_residual(const CP5Point<S>& z) {
  return z.z[0] * z.z[5] + z.z[2] * z.z[3] - z.z[1] * z.z[4];
}

template <class S>
bool is_on_plucker_quadric(const CP5Point<S>& z, double eps = kDefaultEps) {
  const RealOf<S> m = z.max_abs_sq();
  if (m == RealOf<S>{}) throw ZeroVectorError("CP5 point has all coordinates zero");
  return is_zero_rel<S>(ScalarTraits<S>::abs_sq(quadric_residual(z)), m * m, eps);
}

// ---------------------------------------------------------------------------
// Orbit parameter on CP^5: a point of CP^2 (RP^2 in the real case).
template <class S>
struct ProjectiveTriple {
  std::array<S, 3> c{};

  bool equals(const ProjectiveTriple& o, double eps = kDefaultEps) const {
    RealOf<S> ma{}, mb{};
    for (int i = 0; i < 3; ++i) {
      ma = std::max(ma, ScalarTraits<S>::abs_sq(c[i]));
      mb = std::max(mb, ScalarTraits<S>::abs_sq(o.c[i]));
    }
    const RealOf<S> scale = ma * mb;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const S cross = c[i] * o.c[j] - c[j] * o.c[i];
        if (!is_zero_rel<S>(ScalarTraits<S>::abs_sq(cross), scale, eps)) return false;
      }
    return true;
  }
};

// Fubini-Study chordal distance on CP^2 (bounded by 1, zero iff equal).
inline double triple_distance(const ProjectiveTriple<Complex>& a, const ProjectiveTriple<Complex>& b) {
  double na = 0, nb = 0, wedge = 0;
  for (int i = 0; i < 3; ++i) {
    na += std::norm(a.c[i]);
    nb += std::norm(b.c[i]);
    for (int j = i + 1; j < 3; ++j) wedge += std::norm(a.c[i] * b.c[j] - a.c[j] * b.c[i]);
  }
  return std::sqrt(wedge / (na * nb));
}

// The three torus-invariant coordinate products. Every orbit parameter on
// CP^5 is a ratio of these, so the projective triple
//   (z2 z3 : z1 z4 : z0 z5)
// is constant on orbits and separates orbits within each stratum that
// carries a continuous parameter. All three products vanish simultaneously
// exactly when the nonzero coordinates contain no antipodal vertex pair; on
// those strata the torus acts transitively and there is nothing to
// parametrize (reported as nullopt).
template <class S>
std::optional<ProjectiveTriple<S>> orbit_parameter_triple(const CP5Point<S>& z,
                                                          double eps = kDefaultEps) {
  const S g1 = z.z[2] * z.z[3];
  const S g2 = z.z[1] * z.z[4];
  const S g3 = z.z[0] * z.z[5];
  const RealOf<S> scale = z.max_abs_sq() * z.max_abs_sq();
  const bool v1 = is_zero_rel<S>(ScalarTraits<S>::abs_sq(g1), scale, eps);
  const bool v2 = is_zero_rel<S>(ScalarTraits<S>::abs_sq(g2), scale, eps);
  const bool v3 = is_zero_rel<S>(ScalarTraits<S>::abs_sq(g3), scale, eps);
  if (v1 && v2 && v3) return std::nullopt;
  return ProjectiveTriple<S>{{g1, g2, g3}};
}

// Full stratum data of a CP^5 point: the moment polytope of its orbit
// closure (the convex hull of the vertices delta_J with z_J != 0 -- here
// every nonempty vertex subset occurs) and the orbit parameter when the
// stratum carries one.
template <class S>
struct CP5StratumReport {
  ZeroPattern vertices;
  int polytope_dim = 0;
  std::optional<ProjectiveTriple<S>> param;
};

template <class S>
CP5StratumReport<S> cp5_stratum(const CP5Point<S>& z, double eps = kDefaultEps) {
  CP5StratumReport<S> r;
  r.vertices = nonzero_pattern(z, eps);
  r.polytope_dim = pattern_affine_dim(r.vertices);
  r.param = orbit_parameter_triple(z, eps);
  return r;
}

template <class S>
MomentPoint<RealOf<S>> moment_cp5(const CP5Point<S>& z) {
  return moment_cp5<S>(z.z);
}

// ---------------------------------------------------------------------------
// The Plucker embedding descends to orbit spaces. A Grassmannian orbit with
// hypersurface parameter (alpha : beta) lands on the CP^5 orbit whose
// parameter triple is given by one of these closed forms; the shipped form
// is selected by comparing against embedding_oracle, which computes the
// image the slow honest way from an explicit frame.
template <class S>
ProjectiveTriple<S> induced_embedding(const ProjectiveParam<S>& c) {
  // (alpha : beta) -> (alpha : beta : beta - alpha), i.e. c -> (c : 1 : 1-c).
  return ProjectiveTriple<S>{{c.num, c.den, c.den - c.num}};
}

template <class S>
ProjectiveTriple<S> induced_embedding_alternate(const ProjectiveParam<S>& c) {
  // c -> (1/(1-c) : c/(1-c) : 1/c), cleared of denominators.
  return ProjectiveTriple<S>{{c.num * c.den, c.num * c.num, c.den * (c.den - c.num)}};
}

template <class S>
ProjectiveTriple<S> embedding_oracle(const ProjectiveParam<S>& c, double eps = kDefaultEps) {
  // A main-stratum representative with parameter c = a1 a4 / (a2 a3):
  // chart rows (1,0),(0,1),(a1,a3),(a2,a4) with a = (num, den, 1, 1).
  const S one = ScalarTraits<S>::from_int(1);
  const S zero = ScalarTraits<S>::from_int(0);
  const Frame<S> f = Frame<S>::from_rows({{{one, zero}, {zero, one}, {c.num, one}, {c.den, one}}});
  const auto tri = orbit_parameter_triple(plucker_embed(plucker_coordinates(f, eps)), eps);
  if (!tri) throw Error("embedding oracle: representative frame left the parametrized locus");
  return *tri;
}

}  // namespace gt42
