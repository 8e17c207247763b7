#include "gt42/topo.hpp"

#include <gmpxx.h>

#include <algorithm>

#include "gt42/errors.hpp"

namespace gt42 {

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw Error("matrix shape mismatch in multiply");
  IntMatrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const long v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
    }
  return out;
}

bool is_zero(const IntMatrix& m) {
  for (long v : m.a)
    if (v != 0) return false;
  return true;
}

namespace {

// Smith normal form on an exact-arithmetic working copy. The matrices here
// are tiny, so a plain pivot-and-reduce loop is fine; gmp avoids any
// overflow worry from intermediate growth.
std::vector<mpz_class> smith_diagonal(const IntMatrix& m) {
  const int R = m.rows, C = m.cols;
  std::vector<std::vector<mpz_class>> w(R, std::vector<mpz_class>(C));
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) w[i][j] = m.at(i, j);

  std::vector<mpz_class> diag;
  int t = 0;
  while (t < R && t < C) {
    // Find the entry of smallest nonzero magnitude in the remaining block.
    int pr = -1, pc = -1;
    mpz_class best;
    for (int i = t; i < R; ++i)
      for (int j = t; j < C; ++j) {
        if (w[i][j] == 0) continue;
        mpz_class mag = abs(w[i][j]);
        if (pr < 0 || mag < best) {
          best = mag;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;
    std::swap(w[t], w[pr]);
    for (int i = 0; i < R; ++i) std::swap(w[i][t], w[i][pc]);

    bool clean = true;
    for (int i = t + 1; i < R; ++i) {
      if (w[i][t] == 0) continue;
      mpz_class q = w[i][t] / w[t][t];
      for (int j = t; j < C; ++j) w[i][j] -= q * w[t][j];
      if (w[i][t] != 0) clean = false;
    }
    for (int j = t + 1; j < C; ++j) {
      if (w[t][j] == 0) continue;
      mpz_class q = w[t][j] / w[t][t];
      for (int i = t; i < R; ++i) w[i][j] -= q * w[i][t];
      if (w[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // remainders became new smaller pivot candidates

    // Enforce the divisibility chain: fold any non-divisible entry into the
    // pivot column and repeat the elimination.
    bool divides = true;
    for (int i = t + 1; i < R && divides; ++i)
      for (int j = t + 1; j < C && divides; ++j)
        if (w[i][j] % w[t][t] != 0) {
          for (int r = t; r < R; ++r) w[r][t] += w[r][j];
          divides = false;
        }
    if (!divides) continue;

    diag.push_back(abs(w[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace

std::vector<long> smith_invariants(const IntMatrix& m) {
  std::vector<long> out;
  for (const mpz_class& d : smith_diagonal(m)) {
    if (!d.fits_slong_p()) throw Error("invariant factor exceeds long range");
    out.push_back(d.get_si());
  }
  return out;
}

int integer_rank(const IntMatrix& m) { return int(smith_diagonal(m).size()); }

std::string group_to_string(const AbelianGroup& g) {
  std::string s;
  if (g.rank == 1) s = "Z";
  else if (g.rank > 1) s = "Z^" + std::to_string(g.rank);
  for (long t : g.torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(t);
  }
  return s.empty() ? "0" : s;
}

void ChainComplex::validate() const {
  if (cells.empty()) throw NotAComplexError("complex has no cells");
  if (boundary.size() != cells.size())
    throw NotAComplexError("boundary count does not match dimension count");
  if (boundary[0].rows != 0 || boundary[0].cols != cells[0])
    throw NotAComplexError("boundary[0] must be an empty 0 x cells[0] matrix");
  for (size_t d = 1; d < cells.size(); ++d) {
    if (boundary[d].rows != cells[d - 1] || boundary[d].cols != cells[d])
      throw NotAComplexError("boundary matrix shape mismatch in dimension " + std::to_string(d));
    if (d >= 2 && !is_zero(multiply(boundary[d - 1], boundary[d])))
      throw NotAComplexError("boundary of boundary is nonzero in dimension " + std::to_string(d));
  }
}

std::vector<AbelianGroup> cellular_homology(const ChainComplex& c) {
  c.validate();
  const int top = c.top_dim();
  std::vector<int> rank_d(top + 2, 0);       // rank of boundary[d]
  std::vector<std::vector<long>> inv(top + 2);
  for (int d = 1; d <= top; ++d) {
    inv[d] = smith_invariants(c.boundary[d]);
    rank_d[d] = int(inv[d].size());
  }
  std::vector<AbelianGroup> h(top + 1);
  for (int d = 0; d <= top; ++d) {
    h[d].rank = c.cells[d] - rank_d[d] - rank_d[d + 1];
    if (h[d].rank < 0) throw NotAComplexError("negative homology rank: invalid complex");
    for (long t : inv[d + 1])
      if (t > 1) h[d].torsion.push_back(t);
  }
  return h;
}

ChainComplex sphere_complex(int n) {
  if (n < 1) throw InputError("sphere dimension must be >= 1");
  ChainComplex c;
  c.name = "S^" + std::to_string(n);
  c.cells.assign(n + 1, 0);
  c.cells[0] = c.cells[n] = 1;
  c.boundary.resize(n + 1);
  c.boundary[0] = IntMatrix(0, 1);
  for (int d = 1; d <= n; ++d) c.boundary[d] = IntMatrix(c.cells[d - 1], c.cells[d]);
  return c;
}

ChainComplex complex_projective_complex(int n) {
  ChainComplex c;
  c.name = "CP^" + std::to_string(n);
  c.cells.assign(2 * n + 1, 0);
  for (int d = 0; d <= 2 * n; d += 2) c.cells[d] = 1;
  c.boundary.resize(2 * n + 1);
  c.boundary[0] = IntMatrix(0, 1);
  for (int d = 1; d <= 2 * n; ++d) c.boundary[d] = IntMatrix(c.cells[d - 1], c.cells[d]);
  return c;
}

ChainComplex real_projective_plane_complex() {
  ChainComplex c;
  c.name = "RP^2";
  c.cells = {1, 1, 1};
  c.boundary.resize(3);
  c.boundary[0] = IntMatrix(0, 1);
  c.boundary[1] = IntMatrix(1, 1);  // de^1 = v - v = 0
  c.boundary[2] = IntMatrix(1, 1);
  c.boundary[2].at(0, 0) = 2;       // the edge is traversed twice
  return c;
}

std::vector<AbelianGroup> join_homology(const ChainComplex& x, const ChainComplex& y) {
  x.validate();
  y.validate();
  // Augmented complexes, shifted into nonnegative degrees: degree 0 holds the
  // empty cell, degree d+1 holds the d-cells; the new bottom boundary is the
  // augmentation row (1 ... 1).
  auto augmented = [](const ChainComplex& c) {
    ChainComplex a;
    a.name = c.name + "~";
    a.cells.assign(c.cells.size() + 1, 0);
    a.cells[0] = 1;
    for (size_t d = 0; d < c.cells.size(); ++d) a.cells[d + 1] = c.cells[d];
    a.boundary.resize(a.cells.size());
    a.boundary[0] = IntMatrix(0, 1);
    a.boundary[1] = IntMatrix(1, c.cells[0]);
    for (int j = 0; j < c.cells[0]; ++j) a.boundary[1].at(0, j) = 1;
    for (size_t d = 1; d < c.cells.size(); ++d) a.boundary[d + 1] = c.boundary[d];
    return a;
  };
  const ChainComplex ax = augmented(x), ay = augmented(y);

  // Tensor product complex D with D_k = sum over i+j=k of ax_i (x) ay_j and
  // d(a (x) b) = da (x) b + (-1)^i a (x) db.
  const int tx = ax.top_dim(), ty = ay.top_dim();
  ChainComplex d;
  d.name = x.name + " * " + y.name + " (augmented tensor)";
  d.cells.assign(tx + ty + 1, 0);
  auto block_offset = [&](int k, int i) {
    // offset of block (i, k-i) within degree k, blocks ordered by increasing i
    int off = 0;
    for (int ii = 0; ii < i; ++ii) {
      const int jj = k - ii;
      if (ii <= tx && jj >= 0 && jj <= ty) off += ax.cells[ii] * ay.cells[jj];
    }
    return off;
  };
  for (int k = 0; k <= tx + ty; ++k)
    for (int i = std::max(0, k - ty); i <= std::min(k, tx); ++i)
      d.cells[k] += ax.cells[i] * ay.cells[k - i];
  d.boundary.resize(d.cells.size());
  d.boundary[0] = IntMatrix(0, d.cells[0]);
  for (int k = 1; k <= tx + ty; ++k) {
    IntMatrix B(d.cells[k - 1], d.cells[k]);
    for (int i = std::max(0, k - ty); i <= std::min(k, tx); ++i) {
      const int j = k - i;
      const int src = block_offset(k, i);
      // da (x) b lands in block (i-1, j).
      if (i >= 1) {
        const int dst = block_offset(k - 1, i - 1);
        const IntMatrix& bx = ax.boundary[i];
        for (int r = 0; r < bx.rows; ++r)
          for (int cix = 0; cix < bx.cols; ++cix) {
            if (bx.at(r, cix) == 0) continue;
            for (int b = 0; b < ay.cells[j]; ++b)
              B.at(dst + r * ay.cells[j] + b, src + cix * ay.cells[j] + b) += bx.at(r, cix);
          }
      }
      // (-1)^i a (x) db lands in block (i, j-1).
      if (j >= 1) {
        const int dst = block_offset(k - 1, i);
        const IntMatrix& by = ay.boundary[j];
        const long sign = (i % 2 == 0) ? 1 : -1;
        for (int a = 0; a < ax.cells[i]; ++a)
          for (int r = 0; r < by.rows; ++r)
            for (int ciy = 0; ciy < by.cols; ++ciy) {
              if (by.at(r, ciy) == 0) continue;
              B.at(dst + a * ay.cells[j - 1] + r, src + a * ay.cells[j] + ciy) += sign * by.at(r, ciy);
            }
      }
    }
    d.boundary[k] = std::move(B);
  }

  // H_n(join) = H_{n+1}(tensor) for n >= 1; H_0 regains the Z that reduced
  // homology drops.
  const std::vector<AbelianGroup> hd = cellular_homology(d);
  std::vector<AbelianGroup> out(tx + ty, AbelianGroup{});
  out[0].rank = 1;
  for (int n = 1; n < int(out.size()); ++n)
    if (n + 1 < int(hd.size())) out[n] = hd[n + 1];
  // Degree-1 classes of the tensor complex would mean a disconnected join;
  // fold them into H_0 so nothing is silently discarded.
  if (hd.size() > 1) {
    out[0].rank += hd[1].rank;
    for (long t : hd[1].torsion) out[0].torsion.push_back(t);
  }
  return out;
}

const char* model_space_name(ModelSpace s) {
  switch (s) {
    case ModelSpace::G42: return "g42";
    case ModelSpace::CP5: return "cp5";
    case ModelSpace::RealG42: return "g42r";
    case ModelSpace::RealP5: return "rp5";
  }
  return "?";
}

ModelSpace parse_model_space(const std::string& s) {
  if (s == "g42") return ModelSpace::G42;
  if (s == "cp5") return ModelSpace::CP5;
  if (s == "g42r") return ModelSpace::RealG42;
  if (s == "rp5") return ModelSpace::RealP5;
  throw InputError("unknown orbit space '" + s + "' (expected g42, cp5, g42r, rp5)");
}

ChainComplex build_orbit_space_model(ModelSpace space) {
  // Fiber cell structure over the polytope interior.
  ChainComplex fiber;
  switch (space) {
    case ModelSpace::G42: fiber = complex_projective_complex(1); break;
    case ModelSpace::CP5: fiber = complex_projective_complex(2); break;
    case ModelSpace::RealG42: fiber = sphere_complex(1); break;  // RP^1
    case ModelSpace::RealP5: fiber = real_projective_plane_complex(); break;
  }
  const int top = 3 + fiber.top_dim();
  ChainComplex c;
  c.name = std::string("orbit space ") + model_space_name(space);
  c.cells.assign(top + 1, 0);
  c.cells[0] = 1;  // vertex of the collapsed boundary sphere
  c.cells[2] = 1;  // 2-cell of the collapsed boundary sphere
  for (int d = 0; d <= fiber.top_dim(); ++d) c.cells[3 + d] += fiber.cells[d];
  c.boundary.resize(top + 1);
  c.boundary[0] = IntMatrix(0, 1);
  for (int d = 1; d <= top; ++d) c.boundary[d] = IntMatrix(c.cells[d - 1], c.cells[d]);
  // The (interior x fiber-vertex) 3-cell attaches to the boundary 2-sphere
  // with degree 1.
  c.boundary[3].at(0, 0) = 1;
  // Interior cells inherit the fiber's boundary maps (the polytope-boundary
  // part of each attaching map lands in lower-dimensional collapsed cells).
  for (int d = 1; d <= fiber.top_dim(); ++d) {
    const IntMatrix& f = fiber.boundary[d];
    // fiber cells of dim d sit at model dim 3+d and may also share the
    // degree with boundary cells only when 3+d-1 == 2, handled above.
    const int row0 = c.cells[3 + d - 1] - f.rows;  // fiber rows come last
    for (int r = 0; r < f.rows; ++r)
      for (int cc = 0; cc < f.cols; ++cc)
        c.boundary[3 + d].at(row0 + r, c.cells[3 + d] - f.cols + cc) = f.at(r, cc);
  }
  return c;
}

std::vector<AbelianGroup> orbit_space_join_oracle(ModelSpace space) {
  ChainComplex fiber;
  switch (space) {
    case ModelSpace::G42: fiber = complex_projective_complex(1); break;
    case ModelSpace::CP5: fiber = complex_projective_complex(2); break;
    case ModelSpace::RealG42: fiber = sphere_complex(1); break;
    case ModelSpace::RealP5: fiber = real_projective_plane_complex(); break;
  }
  return join_homology(sphere_complex(2), fiber);
}

// ---------------------------------------------------------------------------

AdmissibleComplex build_admissible_complex(bool include_main) {
  AdmissibleComplex w;
  w.include_main = include_main;
  for (const AdmissiblePolytope& p : admissible_table()) {
    if (!include_main && p.kind == PolytopeKind::Octahedron) continue;
    w.cells.push_back(p);
  }
  std::sort(w.cells.begin(), w.cells.end(), [](const AdmissiblePolytope& a, const AdmissiblePolytope& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices.to_ulong() < b.vertices.to_ulong();
  });
  w.facets.resize(w.cells.size());
  w.faces.resize(w.cells.size());
  w.chi.reserve(w.cells.size());
  for (size_t i = 0; i < w.cells.size(); ++i) {
    w.chi.push_back(stabilizer_subtorus(w.cells[i].vertices));
    for (ZeroPattern f : polytope_facets(w.cells[i])) {
      const int j = w.index_of(f);
      if (j < 0) throw Error("facet of an admissible cell is missing from the complex");
      w.facets[i].push_back(j);
    }
    for (ZeroPattern f : polytope_faces(w.cells[i])) {
      const int j = w.index_of(f);
      if (j < 0) throw Error("face of an admissible cell is missing from the complex");
      w.faces[i].push_back(j);
    }
    std::sort(w.facets[i].begin(), w.facets[i].end());
    std::sort(w.faces[i].begin(), w.faces[i].end());
  }
  return w;
}

int AdmissibleComplex::cell_count(int dim) const {
  int n = 0;
  for (const auto& c : cells) n += (c.dim == dim);
  return n;
}

int AdmissibleComplex::index_of(ZeroPattern pattern) const {
  for (size_t i = 0; i < cells.size(); ++i)
    if (cells[i].vertices == pattern) return int(i);
  return -1;
}

}  // namespace gt42
