#pragma once

#include <array>
#include <bitset>
#include <string>
#include <vector>

#include "gt42/frame.hpp"
#include "gt42/pairs.hpp"

namespace gt42 {

// Kinds of moment-map images of torus strata: subpolytopes of the
// hypersimplex spanned by subsets of its six vertices that are actually
// attained by points of G(4,2).
enum class PolytopeKind { Vertex, Edge, Triangle, Square, Pyramid, Octahedron };

inline const char* polytope_kind_name(PolytopeKind k) {
  switch (k) {
    case PolytopeKind::Vertex: return "vertex";
    case PolytopeKind::Edge: return "edge";
    case PolytopeKind::Triangle: return "triangle";
    case PolytopeKind::Square: return "square";
    case PolytopeKind::Pyramid: return "pyramid";
    case PolytopeKind::Octahedron: return "octahedron";
  }
  return "?";
}

struct AdmissiblePolytope {
  ZeroPattern vertices;  // bit k set <=> delta_{kPairs[k]} is a vertex
  PolytopeKind kind = PolytopeKind::Vertex;
  int dim = 0;  // affine dimension: 0,1,2,3

  bool operator==(const AdmissiblePolytope&) const = default;

  std::vector<int> vertex_list() const {
    std::vector<int> v;
    for (int k = 0; k < kNumPairs; ++k)
      if (vertices[k]) v.push_back(k);
    return v;
  }
  std::string name() const;
};

// True when some rank-2 frame has exactly this set of nonvanishing minors.
// Affine dimension of the convex hull of {delta_k : pattern[k]}; exact
// integer arithmetic, valid for every nonempty vertex subset.
int pattern_affine_dim(ZeroPattern pattern);

bool is_admissible(ZeroPattern pattern);

// Classifies a nonzero-coordinate pattern; throws NotAdmissibleError when no
// point of the Grassmannian realizes it.
AdmissiblePolytope classify_pattern(ZeroPattern pattern);

// All 36 admissible polytopes, sorted by (vertex count, pattern bits).
const std::vector<AdmissiblePolytope>& admissible_table();

// Faces of an admissible polytope (as vertex sets), grouped by dimension.
// Facets are the codimension-1 faces; all faces of admissible polytopes are
// again admissible.
std::vector<ZeroPattern> polytope_facets(const AdmissiblePolytope& p);
std::vector<ZeroPattern> polytope_faces(const AdmissiblePolytope& p);  // proper faces, all dims

struct Stratum {
  AdmissiblePolytope polytope;
  int dim_real = 0;  // real dimension of the stratum in G(4,2)
};

// Real dimensions by polytope: octahedron stratum is open and 8-dimensional;
// every other stratum has dimension 2 * dim(polytope).
int stratum_dimension(const AdmissiblePolytope& p);

template <class S>
Stratum stratum_of(const Frame<S>& f, double eps = kDefaultEps) {
  const AdmissiblePolytope p = classify_pattern(nonzero_pattern(plucker_coordinates(f, eps), eps));
  return Stratum{p, stratum_dimension(p)};
}

// ---------------------------------------------------------------------------
// Strata lattice: closure order. A stratum closure contains another exactly
// when its polytope contains the other's, and for subpolytopes of the
// octahedron spanned by vertices that is vertex-subset inclusion.
struct StrataLattice {
  // node 0 is the empty stratum; nodes 1..36 follow admissible_table() order.
  struct Node {
    bool empty = false;
    AdmissiblePolytope polytope;  // valid when !empty
    std::vector<int> covers;      // nodes covering this one (one step up)
  };
  std::vector<Node> nodes;

  int node_of(ZeroPattern pattern) const;  // -1 if absent
  int out_degree(int node) const { return int(nodes[node].covers.size()); }
};

const StrataLattice& strata_lattice();

// ---------------------------------------------------------------------------
// Stabilizers. The subtorus of (C*)^4 fixing a stratum pointwise up to frame
// gauge is cut out by equating the pair characters of the polytope vertices;
// its lattice of one-parameter subgroups is the integer kernel below.
struct StabilizerSubtorus {
  int dim = 0;
  std::vector<std::array<long, 4>> basis;  // primitive integer basis, canonical form
};

StabilizerSubtorus stabilizer_subtorus(ZeroPattern pattern);

// The corresponding subgroup of the real form Z_2^4: sign vectors whose pair
// characters agree on the pattern. Basis over F_2, order = 2^dim.
struct RealStabilizer {
  int order = 1;
  std::vector<std::bitset<4>> basis;
};

RealStabilizer real_stabilizer(ZeroPattern pattern);

// ---------------------------------------------------------------------------
// Rank function of a point: J subset of {1,2,3,4} (bitmask, bit i-1 for
// index i) maps to dim span{ pi(e_j) : j in J } in the quotient C^4 / X.
// Computed from a basis of the annihilator of the column span.
template <class S>
int rank_function(const Frame<S>& f, unsigned j_mask, double eps = kDefaultEps);

// Full rank profile over all 16 subsets, used to compare the two stratum
// definitions.
template <class S>
std::array<int, 16> rank_profile(const Frame<S>& f, double eps = kDefaultEps) {
  std::array<int, 16> out{};
  for (unsigned m = 0; m < 16; ++m) out[m] = rank_function(f, m, eps);
  return out;
}

// Canonical integer witness frame for each admissible pattern.
std::array<std::array<long, 2>, 4> stratum_witness_rows(ZeroPattern pattern);

template <class S>
Frame<S> stratum_witness(ZeroPattern pattern);

// --- implementation of the templated pieces -------------------------------

namespace detail {
// Row-echelon rank of an n x m matrix (n <= 4 here) with relative-tolerance
// pivoting for floating scalars, exact pivoting otherwise.
template <class S>
int matrix_rank(std::vector<std::array<S, 4>> rows, int ncols, double eps) {
  using T = ScalarTraits<S>;
  RealOf<S> scale{};
  for (const auto& r : rows)
    for (int c = 0; c < ncols; ++c) scale = std::max(scale, T::abs_sq(r[c]));
  int rank = 0;
  int row = 0;
  for (int col = 0; col < ncols && row < int(rows.size()); ++col) {
    int pivot = -1;
    RealOf<S> best{};
    for (int r = row; r < int(rows.size()); ++r) {
      const RealOf<S> a = T::abs_sq(rows[r][col]);
      if (!is_zero_rel<S>(a, scale, eps) && (pivot < 0 || best < a)) {
        pivot = r;
        best = a;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[row], rows[pivot]);
    for (int r = row + 1; r < int(rows.size()); ++r) {
      const S factor = rows[r][col] / rows[row][col];
      for (int c = col; c < ncols; ++c) rows[r][c] = rows[r][c] - factor * rows[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}
}  // namespace detail

template <class S>
int rank_function(const Frame<S>& f, unsigned j_mask, double eps) {
  using T = ScalarTraits<S>;
  // Null space of f^T: two independent row vectors annihilating the columns.
  // Solve by eliminating on the 2x4 transpose.
  std::array<std::array<S, 4>, 2> xt;
  for (int c = 0; c < 2; ++c)
    for (int r = 0; r < 4; ++r) xt[c][r] = f(r, c);

  RealOf<S> scale{};
  for (const auto& row : xt)
    for (const S& e : row) scale = std::max(scale, T::abs_sq(e));

  std::array<int, 2> pivot_col{-1, -1};
  int nrows = 0;
  for (int col = 0; col < 4 && nrows < 2; ++col) {
    int pivot = -1;
    RealOf<S> best{};
    for (int r = nrows; r < 2; ++r) {
      const RealOf<S> a = T::abs_sq(xt[r][col]);
      if (!is_zero_rel<S>(a, scale, eps) && (pivot < 0 || best < a)) {
        pivot = r;
        best = a;
      }
    }
    if (pivot < 0) continue;
    std::swap(xt[nrows], xt[pivot]);
    for (int r = 0; r < 2; ++r) {
      if (r == nrows) continue;
      const S factor = xt[r][col] / xt[nrows][col];
      for (int c = 0; c < 4; ++c) xt[r][c] = xt[r][c] - factor * xt[nrows][c];
    }
    pivot_col[nrows] = col;
    ++nrows;
  }
  if (nrows < 2) throw RankDeficientError();

  // Back-substitute the two free columns into null space basis vectors.
  std::vector<std::array<S, 4>> nullsp;
  const S one = T::from_int(1), zero = T::from_int(0);
  for (int col = 0; col < 4; ++col) {
    if (col == pivot_col[0] || col == pivot_col[1]) continue;
    std::array<S, 4> v{zero, zero, zero, zero};
    v[col] = one;
    for (int r = 0; r < 2; ++r) v[pivot_col[r]] = -(xt[r][col] / xt[r][pivot_col[r]]);
    nullsp.push_back(v);
  }

  // Restrict the annihilator to the requested columns and measure its rank.
  std::vector<std::array<S, 4>> restricted;
  for (const auto& n : nullsp) {
    std::array<S, 4> row{zero, zero, zero, zero};
    int c = 0;
    for (int j = 0; j < 4; ++j)
      if (j_mask & (1u << j)) row[c++] = n[j];
    restricted.push_back(row);
  }
  int ncols = 0;
  for (int j = 0; j < 4; ++j)
    if (j_mask & (1u << j)) ++ncols;
  if (ncols == 0) return 0;
  // Transpose convention does not matter for rank; eliminate rows directly.
  return detail::matrix_rank<S>(std::move(restricted), ncols, eps);
}

template <class S>
Frame<S> stratum_witness(ZeroPattern pattern) {
  // Integer row tables; see strata.cpp for the catalogue.
  std::array<std::array<long, 2>, 4> rows = stratum_witness_rows(pattern);
  Frame<S> f;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 2; ++c) f(r, c) = ScalarTraits<S>::from_int(rows[r][c]);
  return f;
}

}  // namespace gt42
