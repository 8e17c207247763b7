#pragma once

#include <string>
#include <vector>

#include "gt42/strata.hpp"

namespace gt42 {

// Dense integer matrix, row-major; plenty for chain complexes this small.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), 0) {}

  long& at(int r, int c) { return a[size_t(r) * cols + c]; }
  long at(int r, int c) const { return a[size_t(r) * cols + c]; }
};

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);
bool is_zero(const IntMatrix& m);

// Invariant factors d1 | d2 | ... (positive, nonzero ones only) of the
// matrix viewed as a map of free abelian groups.
std::vector<long> smith_invariants(const IntMatrix& m);
int integer_rank(const IntMatrix& m);

// Finitely generated abelian group: Z^rank + sum Z/t for t in torsion
// (each t >= 2, t_i | t_{i+1}).
struct AbelianGroup {
  int rank = 0;
  std::vector<long> torsion;

  bool operator==(const AbelianGroup& o) const = default;
  bool trivial() const { return rank == 0 && torsion.empty(); }
};

std::string group_to_string(const AbelianGroup& g);

// Chain complex of free abelian groups: cells[d] generators in degree d,
// boundary[d] a cells[d-1] x cells[d] matrix (d >= 1; boundary[0] is empty).
struct ChainComplex {
  std::string name;
  std::vector<int> cells;
  std::vector<IntMatrix> boundary;

  int top_dim() const { return int(cells.size()) - 1; }
  // Throws NotAComplexError on shape mismatch or when d o d != 0.
  void validate() const;
};

std::vector<AbelianGroup> cellular_homology(const ChainComplex& c);

// Building blocks with their standard minimal cell structures.
ChainComplex sphere_complex(int n);            // S^n, n >= 1: one 0-cell, one n-cell
ChainComplex complex_projective_complex(int n);  // CP^n: one cell in each even dim
ChainComplex real_projective_plane_complex();  // RP^2: d1 = 0, d2 = (2)

// Homology of the join X * Y, computed at chain level: the reduced complex
// of the join is the (degree-shifted) tensor product of the augmented
// complexes of X and Y. Returns unreduced homology up to dim(X)+dim(Y)+1.
std::vector<AbelianGroup> join_homology(const ChainComplex& x, const ChainComplex& y);

// ---------------------------------------------------------------------------
// Orbit-space cell models. Each quotient is a polytope x fiber bundle glued
// over the polytope boundary, which yields one cell per (interior x fiber
// cell) plus the two cells of the collapsed boundary 2-sphere:
//   G42:     octahedron x CP^1 -> cells in dims {0,2,3,5}
//   CP5:     octahedron x CP^2 -> cells in dims {0,2,3,5,7}
//   RealG42: octahedron x RP^1 -> cells in dims {0,2,3,4}
//   RealP5:  octahedron x RP^2 -> cells in dims {0,2,3,4,5}
// The 3-cell (interior x point) attaches to the boundary sphere with degree
// one; the RP^2 fiber contributes its usual degree-2 attachment.
enum class ModelSpace { G42, CP5, RealG42, RealP5 };

const char* model_space_name(ModelSpace s);
ModelSpace parse_model_space(const std::string& s);  // throws InputError

ChainComplex build_orbit_space_model(ModelSpace space);

inline ChainComplex build_g42_orbit_space_model() { return build_orbit_space_model(ModelSpace::G42); }

// The expected homology of each model per the join description of the
// quotient (S^2 * fiber), computed independently by join_homology.
std::vector<AbelianGroup> orbit_space_join_oracle(ModelSpace space);

// ---------------------------------------------------------------------------
// The complex of admissible polytopes: all 36 of them glued along the face
// operator (the boundary of each polytope is the disjoint union of its
// proper faces), optionally without the top interior cell. Each cell carries
// its stabilizer subtorus as a label.
struct AdmissibleComplex {
  bool include_main = true;
  std::vector<AdmissiblePolytope> cells;     // sorted by (dim, pattern)
  std::vector<std::vector<int>> facets;      // per cell: indices of codim-1 faces
  std::vector<std::vector<int>> faces;       // per cell: indices of all proper faces
  std::vector<StabilizerSubtorus> chi;       // per cell: stabilizer label

  int cell_count(int dim) const;
  int index_of(ZeroPattern pattern) const;   // -1 when absent
};

AdmissibleComplex build_admissible_complex(bool include_main);

}  // namespace gt42
