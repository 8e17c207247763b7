#include "gt42/orbits.hpp"

namespace gt42 {

BoundaryParam boundary_parameter(const Stratum& s) {
  const auto& P = s.polytope;
  switch (P.kind) {
    case PolytopeKind::Octahedron:
      throw UnknownStratumError("the dense stratum carries the parameter itself, not a limit value");
    case PolytopeKind::Pyramid:
    case PolytopeKind::Square: {
      // Determined by which coordinate pair(s) vanish. Squares always drop an
      // antipodal pair, so checking any one missing index suffices.
      int missing = -1;
      for (int k = 0; k < kNumPairs; ++k)
        if (!P.vertices[k]) { missing = k; break; }
      // Parameter c = (p14 p23) : (p13 p24): the 14/23 factor kills c, the
      // 13/24 factor sends it to infinity, and dropping 12/34 forces the two
      // factors equal, i.e. c = 1.
      if (missing == pair_index(1, 4) || missing == pair_index(2, 3)) return BoundaryParam::Zero;
      if (missing == pair_index(1, 3) || missing == pair_index(2, 4)) return BoundaryParam::Infinity;
      return BoundaryParam::One;
    }
    default:
      return BoundaryParam::Any;
  }
}

ClosureReport classify_closure(const Stratum& s) {
  ClosureReport r;
  r.stratum = s;
  switch (s.polytope.kind) {
    case PolytopeKind::Octahedron:
      r.kind = ClosureKind::SingularToric6;
      r.singular_point_count = 6;
      r.description = "singular projective toric variety, singular exactly at the 6 coordinate points";
      break;
    case PolytopeKind::Pyramid:
      r.kind = ClosureKind::SingularToric6;
      r.singular_point_count = 1;
      r.description = "singular projective toric 2-fold with one singular point (the apex vertex)";
      break;
    case PolytopeKind::Triangle:
      r.kind = ClosureKind::CP2;
      r.description = "projective plane";
      break;
    case PolytopeKind::Square:
      r.kind = ClosureKind::CP1xCP1;
      r.description = "product of two projective lines";
      break;
    case PolytopeKind::Edge:
      r.kind = ClosureKind::CP1;
      r.description = "projective line";
      break;
    case PolytopeKind::Vertex:
      r.kind = ClosureKind::Point;
      r.description = "coordinate point";
      break;
  }
  return r;
}

const char* local_model_name(LocalModelKind k) {
  switch (k) {
    case LocalModelKind::Smooth: return "R^8 (smooth)";
    case LocalModelKind::D2xConeS2: return "D^2 x cone(S^2)";
    case LocalModelKind::D1xConeS5modT2: return "D^1 x cone(S^5 / T^2)";
    case LocalModelKind::ConeS7modT3: return "cone(S^7 / T^3)";
    case LocalModelKind::RealSmooth: return "R^4 (smooth)";
    case LocalModelKind::D1xConeRP1: return "D^2 x cone(RP^1)";
    case LocalModelKind::D1xConeS2modZ2sq: return "D^1 x cone(S^2 / Z_2^2)";
    case LocalModelKind::ConeS3modZ2cube: return "cone(S^3 / Z_2^3)";
  }
  return "?";
}

LocalModelReport local_model(ZeroPattern pattern, bool real_form) {
  const AdmissiblePolytope P = classify_pattern(pattern);
  LocalModelReport r;
  r.k = P.dim;
  r.stabilizer_dim = stabilizer_subtorus(pattern).dim;
  if (r.k != 4 - r.stabilizer_dim)
    throw Error("polytope dimension inconsistent with stabilizer dimension");
  static const LocalModelKind complex_models[4] = {
      LocalModelKind::ConeS7modT3, LocalModelKind::D1xConeS5modT2,
      LocalModelKind::D2xConeS2, LocalModelKind::Smooth};
  static const LocalModelKind real_models[4] = {
      LocalModelKind::ConeS3modZ2cube, LocalModelKind::D1xConeS2modZ2sq,
      LocalModelKind::D1xConeRP1, LocalModelKind::RealSmooth};
  r.model = real_form ? real_models[r.k] : complex_models[r.k];
  return r;
}

}  // namespace gt42
