#include "gt42/strata.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <gmpxx.h>

namespace gt42 {

namespace {

int popcount(ZeroPattern p) { return int(p.count()); }

// Does the vertex set contain an antipodal pair (complementary index pairs)?
bool has_antipodal_pair(ZeroPattern p) {
  for (int k = 0; k < kNumPairs; ++k)
    if (p[k] && p[complement_index(k)]) return true;
  return false;
}

PolytopeKind kind_by_count(int n) {
  switch (n) {
    case 1: return PolytopeKind::Vertex;
    case 2: return PolytopeKind::Edge;
    case 3: return PolytopeKind::Triangle;
    case 4: return PolytopeKind::Square;
    case 5: return PolytopeKind::Pyramid;
    default: return PolytopeKind::Octahedron;
  }
}

int dim_by_kind(PolytopeKind k) {
  switch (k) {
    case PolytopeKind::Vertex: return 0;
    case PolytopeKind::Edge: return 1;
    case PolytopeKind::Triangle:
    case PolytopeKind::Square: return 2;
    default: return 3;
  }
}

}  // namespace

// Exact affine dimension of the vertex set: rank of {delta_k - delta_k0}.
int pattern_affine_dim(ZeroPattern p) {
  std::vector<std::array<long, 4>> diffs;
  int first = -1;
  for (int k = 0; k < kNumPairs; ++k) {
    if (!p[k]) continue;
    if (first < 0) {
      first = k;
      continue;
    }
    const auto a = delta(k), b = delta(first);
    diffs.push_back({a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]});
  }
  // Fraction-free Gaussian elimination on tiny integer rows.
  int rank = 0;
  for (int col = 0; col < 4 && rank < int(diffs.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < int(diffs.size()); ++r)
      if (diffs[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(diffs[rank], diffs[pivot]);
    for (int r = rank + 1; r < int(diffs.size()); ++r) {
      if (diffs[r][col] == 0) continue;
      const long f = diffs[r][col], g = diffs[rank][col];
      for (int c = 0; c < 4; ++c) diffs[r][c] = diffs[r][c] * g - diffs[rank][c] * f;
    }
    ++rank;
  }
  return rank;
}

bool is_admissible(ZeroPattern pattern) {
  const int n = popcount(pattern);
  if (n == 0) return false;
  if (n >= 5) return true;
  if (n == 4) {
    // Exactly the three "diagonal rectangles": both missing vertices antipodal.
    ZeroPattern missing = ~pattern;
    missing &= ZeroPattern((1u << kNumPairs) - 1);
    const auto m = missing;
    for (int k = 0; k < kNumPairs; ++k)
      if (m[k]) return m[complement_index(k)];
    return false;
  }
  // Points, intervals and the eight boundary triangles: no antipodal pair.
  return !has_antipodal_pair(pattern);
}

AdmissiblePolytope classify_pattern(ZeroPattern pattern) {
  if (pattern.none()) throw NotAdmissibleError("empty coordinate pattern");
  if (!is_admissible(pattern)) {
    std::string names;
    for (int k = 0; k < kNumPairs; ++k)
      if (pattern[k]) names += (names.empty() ? "" : ",") + pair_name(k);
    throw NotAdmissibleError("pattern {" + names + "} is not realized by any point");
  }
  AdmissiblePolytope p;
  p.vertices = pattern;
  p.kind = kind_by_count(popcount(pattern));
  p.dim = dim_by_kind(p.kind);
  return p;
}

const std::vector<AdmissiblePolytope>& admissible_table() {
  static const std::vector<AdmissiblePolytope> table = [] {
    std::vector<AdmissiblePolytope> t;
    for (unsigned long bits = 1; bits < (1u << kNumPairs); ++bits) {
      const ZeroPattern p(bits);
      if (is_admissible(p)) t.push_back(classify_pattern(p));
    }
    std::sort(t.begin(), t.end(), [](const AdmissiblePolytope& a, const AdmissiblePolytope& b) {
      const int ca = int(a.vertices.count()), cb = int(b.vertices.count());
      if (ca != cb) return ca < cb;
      return a.vertices.to_ulong() < b.vertices.to_ulong();
    });
    for (const auto& p : t)
      if (pattern_affine_dim(p.vertices) != p.dim)
        throw Error("admissible table self-check failed: dimension mismatch");
    return t;
  }();
  return table;
}

std::string AdmissiblePolytope::name() const {
  if (kind == PolytopeKind::Octahedron) return "octahedron";
  if (kind == PolytopeKind::Pyramid || kind == PolytopeKind::Square) {
    std::string s = "P";
    bool first = true;
    for (int k = 0; k < kNumPairs; ++k)
      if (!vertices[k]) {
        s += (first ? "" : ",") + pair_name(k);
        first = false;
      }
    return s;
  }
  const char prefix = kind == PolytopeKind::Triangle ? 'T' : kind == PolytopeKind::Edge ? 'E' : 'V';
  std::string s(1, prefix);
  bool first = true;
  for (int k = 0; k < kNumPairs; ++k)
    if (vertices[k]) {
      s += (first ? "" : ".") + pair_name(k);
      first = false;
    }
  return s;
}

int stratum_dimension(const AdmissiblePolytope& p) {
  return p.kind == PolytopeKind::Octahedron ? 8 : 2 * p.dim;
}

std::vector<ZeroPattern> polytope_facets(const AdmissiblePolytope& p) {
  std::vector<ZeroPattern> out;
  const auto verts = p.vertex_list();
  switch (p.kind) {
    case PolytopeKind::Vertex:
      break;
    case PolytopeKind::Edge:
      for (int v : verts) out.push_back(ZeroPattern().set(v));
      break;
    case PolytopeKind::Triangle:
      for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
          out.push_back(ZeroPattern().set(verts[i]).set(verts[j]));
      break;
    case PolytopeKind::Square:
      // Sides only; the two diagonals are antipodal vertex pairs.
      for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
          if (verts[j] != complement_index(verts[i]))
            out.push_back(ZeroPattern().set(verts[i]).set(verts[j]));
      break;
    case PolytopeKind::Pyramid: {
      // Apex is the vertex antipodal to the missing one; base is the square
      // on the remaining four, lateral facets join the apex to base sides.
      int missing = -1;
      for (int k = 0; k < kNumPairs; ++k)
        if (!p.vertices[k]) missing = k;
      const int apex = complement_index(missing);
      ZeroPattern base = p.vertices;
      base.reset(apex);
      out.push_back(base);
      const auto bverts = AdmissiblePolytope{base, PolytopeKind::Square, 2}.vertex_list();
      for (size_t i = 0; i < bverts.size(); ++i)
        for (size_t j = i + 1; j < bverts.size(); ++j)
          if (bverts[j] != complement_index(bverts[i]))
            out.push_back(ZeroPattern().set(apex).set(bverts[i]).set(bverts[j]));
      break;
    }
    case PolytopeKind::Octahedron:
      // The eight boundary triangles: one vertex from each antipodal class.
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k) {
            ZeroPattern t;
            t.set(i ? complement_index(0) : 0);
            t.set(j ? complement_index(1) : 1);
            t.set(k ? complement_index(2) : 2);
            out.push_back(t);
          }
      break;
  }
  return out;
}

std::vector<ZeroPattern> polytope_faces(const AdmissiblePolytope& p) {
  std::vector<ZeroPattern> all;
  std::vector<ZeroPattern> frontier{p.vertices};
  while (!frontier.empty()) {
    std::vector<ZeroPattern> next;
    for (const auto& f : frontier)
      for (const auto& g : polytope_facets(classify_pattern(f)))
        if (std::find(all.begin(), all.end(), g) == all.end() &&
            std::find(next.begin(), next.end(), g) == next.end())
          next.push_back(g);
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](ZeroPattern a, ZeroPattern b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.to_ulong() < b.to_ulong();
  });
  return all;
}

// ---------------------------------------------------------------------------

const StrataLattice& strata_lattice() {
  static const StrataLattice lattice = [] {
    StrataLattice L;
    L.nodes.push_back(StrataLattice::Node{true, {}, {}});
    for (const auto& p : admissible_table()) L.nodes.push_back(StrataLattice::Node{false, p, {}});

    const int n = int(L.nodes.size());
    auto subset = [&](int u, int v) {
      if (L.nodes[u].empty) return !L.nodes[v].empty;
      if (L.nodes[v].empty) return false;
      const auto a = L.nodes[u].polytope.vertices, b = L.nodes[v].polytope.vertices;
      return a != b && (a & b) == a;
    };
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (!subset(u, v)) continue;
        bool cover = true;
        for (int w = 0; w < n && cover; ++w)
          if (w != u && w != v && subset(u, w) && subset(w, v)) cover = false;
        if (cover) L.nodes[u].covers.push_back(v);
      }
    return L;
  }();
  return lattice;
}

int StrataLattice::node_of(ZeroPattern pattern) const {
  for (int i = 0; i < int(nodes.size()); ++i)
    if (!nodes[i].empty && nodes[i].polytope.vertices == pattern) return i;
  return -1;
}

// ---------------------------------------------------------------------------

StabilizerSubtorus stabilizer_subtorus(ZeroPattern pattern) {
  if (pattern.none()) throw NotAdmissibleError("empty pattern has no stratum");
  // Difference vectors of the polytope vertices, exact rational elimination.
  std::vector<std::array<mpq_class, 4>> rows;
  int first = -1;
  for (int k = 0; k < kNumPairs; ++k) {
    if (!pattern[k]) continue;
    if (first < 0) {
      first = k;
      continue;
    }
    const auto a = delta(k), b = delta(first);
    rows.push_back({mpq_class(a[0] - b[0]), mpq_class(a[1] - b[1]), mpq_class(a[2] - b[2]),
                    mpq_class(a[3] - b[3])});
  }

  // Reduced row echelon form.
  std::vector<int> pivot_cols;
  int r = 0;
  for (int col = 0; col < 4 && r < int(rows.size()); ++col) {
    int pivot = -1;
    for (int i = r; i < int(rows.size()); ++i)
      if (rows[i][col] != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    const mpq_class d = rows[r][col];
    for (int c = 0; c < 4; ++c) rows[r][c] /= d;
    for (int i = 0; i < int(rows.size()); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const mpq_class f = rows[i][col];
      for (int c = 0; c < 4; ++c) rows[i][c] -= f * rows[r][c];
    }
    pivot_cols.push_back(col);
    ++r;
  }

  StabilizerSubtorus out;
  for (int col = 0; col < 4; ++col) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), col) != pivot_cols.end()) continue;
    std::array<mpq_class, 4> v{0, 0, 0, 0};
    v[col] = 1;
    for (int i = 0; i < int(pivot_cols.size()); ++i) v[pivot_cols[i]] = -rows[i][col];
    // Clear denominators to a primitive integer vector, first entry positive.
    mpz_class lcm = 1;
    for (const auto& q : v) lcm = lcm / gcd(lcm, q.get_den()) * q.get_den();
    std::array<long, 4> w{};
    mpz_class g = 0;
    for (int c = 0; c < 4; ++c) {
      mpq_class scaled = v[c] * lcm;
      scaled.canonicalize();
      g = gcd(g, scaled.get_num());
      w[c] = scaled.get_num().get_si();
    }
    if (g > 1)
      for (auto& x : w) x /= g.get_si();
    for (int c = 0; c < 4; ++c) {
      if (w[c] == 0) continue;
      if (w[c] < 0)
        for (auto& x : w) x = -x;
      break;
    }
    out.basis.push_back(w);
  }
  out.dim = int(out.basis.size());
  return out;
}

RealStabilizer real_stabilizer(ZeroPattern pattern) {
  if (pattern.none()) throw NotAdmissibleError("empty pattern has no stratum");
  // Same system over F_2.
  std::vector<std::bitset<4>> rows;
  int first = -1;
  for (int k = 0; k < kNumPairs; ++k) {
    if (!pattern[k]) continue;
    if (first < 0) {
      first = k;
      continue;
    }
    const auto a = delta(k), b = delta(first);
    std::bitset<4> row;
    for (int c = 0; c < 4; ++c) row[c] = ((a[c] - b[c]) & 1) != 0;
    rows.push_back(row);
  }
  std::vector<int> pivot_cols;
  int r = 0;
  for (int col = 0; col < 4 && r < int(rows.size()); ++col) {
    int pivot = -1;
    for (int i = r; i < int(rows.size()); ++i)
      if (rows[i][col]) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    for (int i = 0; i < int(rows.size()); ++i)
      if (i != r && rows[i][col]) rows[i] ^= rows[r];
    pivot_cols.push_back(col);
    ++r;
  }
  RealStabilizer out;
  for (int col = 0; col < 4; ++col) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), col) != pivot_cols.end()) continue;
    std::bitset<4> v;
    v.set(col);
    for (int i = 0; i < int(pivot_cols.size()); ++i)
      if (rows[i][col]) v.set(pivot_cols[i]);
    out.basis.push_back(v);
  }
  out.order = 1 << out.basis.size();
  return out;
}

// ---------------------------------------------------------------------------

std::array<std::array<long, 2>, 4> stratum_witness_rows(ZeroPattern pattern) {
  using Rows = std::array<std::array<long, 2>, 4>;
  const AdmissiblePolytope p = classify_pattern(pattern);  // validates

  static const std::map<unsigned long, Rows> fixed = [] {
    std::map<unsigned long, Rows> m;
    auto put = [&](std::initializer_list<const char*> pairs, Rows rows) {
      ZeroPattern pat;
      for (const char* s : pairs) pat.set(parse_pair(s));
      m[pat.to_ulong()] = rows;
    };
    // Full octahedron.
    put({"12", "13", "14", "23", "24", "34"}, Rows{{{1, 0}, {-1, 1}, {1, 1}, {0, 1}}});
    // Pyramids: exactly one minor vanishes.
    put({"13", "14", "23", "24", "34"}, Rows{{{1, 1}, {1, 1}, {1, 0}, {0, 1}}});  // no 12
    put({"12", "14", "23", "24", "34"}, Rows{{{1, 1}, {1, 0}, {1, 1}, {0, 1}}});  // no 13
    put({"12", "13", "23", "24", "34"}, Rows{{{1, 1}, {1, 0}, {0, 1}, {1, 1}}});  // no 14
    put({"12", "13", "14", "24", "34"}, Rows{{{1, 0}, {1, 1}, {1, 1}, {0, 1}}});  // no 23
    put({"12", "13", "14", "23", "34"}, Rows{{{1, 0}, {0, 1}, {1, 1}, {0, 1}}});  // no 24
    put({"12", "13", "14", "23", "24"}, Rows{{{1, 0}, {0, 1}, {1, 1}, {1, 1}}});  // no 34
    // Diagonal rectangles.
    put({"13", "14", "23", "24"}, Rows{{{1, 0}, {1, 0}, {0, 1}, {0, 1}}});
    put({"12", "14", "23", "34"}, Rows{{{1, 0}, {0, 1}, {1, 0}, {0, 1}}});
    put({"12", "13", "24", "34"}, Rows{{{1, 0}, {0, 1}, {0, 1}, {1, 0}}});
    // Boundary triangles.
    put({"14", "24", "34"}, Rows{{{1, 0}, {1, 0}, {1, 0}, {0, 1}}});
    put({"13", "23", "34"}, Rows{{{1, 0}, {1, 0}, {0, 1}, {1, 0}}});
    put({"12", "23", "24"}, Rows{{{0, 1}, {1, 0}, {0, 1}, {0, 1}}});
    put({"12", "13", "14"}, Rows{{{0, 1}, {1, 0}, {1, 0}, {1, 0}}});
    put({"23", "24", "34"}, Rows{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}});
    put({"13", "14", "34"}, Rows{{{1, 0}, {0, 0}, {0, 1}, {1, 1}}});
    put({"12", "14", "24"}, Rows{{{1, 0}, {0, 1}, {0, 0}, {1, 1}}});
    put({"12", "13", "23"}, Rows{{{1, 0}, {0, 1}, {1, 1}, {0, 0}}});
    return m;
  }();

  if (auto it = fixed.find(pattern.to_ulong()); it != fixed.end()) return it->second;

  Rows rows{{{0, 0}, {0, 0}, {0, 0}, {0, 0}}};
  if (p.kind == PolytopeKind::Vertex) {
    const IndexPair j = kPairs[p.vertex_list()[0]];
    rows[j.a - 1] = {1, 0};
    rows[j.b - 1] = {0, 1};
    return rows;
  }
  // Edge {J,K}: J and K share one index i; span{e_i, e_j + e_k}.
  const auto verts = p.vertex_list();
  const IndexPair J = kPairs[verts[0]], K = kPairs[verts[1]];
  const int i = J.contains(K.a) ? K.a : K.b;
  rows[i - 1] = {1, 0};
  for (int idx : {J.a, J.b, K.a, K.b})
    if (idx != i) rows[idx - 1] = {0, 1};
  return rows;
}

}  // namespace gt42
