#include "gt42/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gt42/cp5.hpp"
#include "gt42/io.hpp"
#include "gt42/morse.hpp"
#include "gt42/orbits.hpp"
#include "gt42/random.hpp"
#include "gt42/strata.hpp"
#include "gt42/topo.hpp"

namespace gt42 {
namespace {

// Bitmask of scalar modes a check applies to.
constexpr unsigned kComplex = 1u, kReal = 2u, kExact = 4u;
constexpr unsigned kFloating = kComplex | kReal;
constexpr unsigned kAllModes = kComplex | kReal | kExact;

unsigned mode_bit(ScalarMode m) {
  switch (m) {
    case ScalarMode::ComplexF64: return kComplex;
    case ScalarMode::RealF64: return kReal;
    case ScalarMode::GaussianRationalExact: return kExact;
  }
  return kComplex;
}

// Invoke a generic callable with the scalar type selected by the mode.
template <class F>
bool with_scalar(ScalarMode m, F&& f) {
  switch (m) {
    case ScalarMode::RealF64: return f.template operator()<double>();
    case ScalarMode::GaussianRationalExact: return f.template operator()<GaussianRational>();
    case ScalarMode::ComplexF64: break;
  }
  return f.template operator()<Complex>();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Per-check context. Every check draws from a fresh generator seeded with the
// configured seed, so results do not depend on check order or on which other
// checks ran.
struct CheckContext {
  const RunConfig& cfg;
  CheckResult& r;
  Rng rng;

  CheckContext(const RunConfig& c, CheckResult& res) : cfg(c), r(res), rng(c.seed) {}

  int samples(int base) const {
    return std::max(1, int(std::lround(double(base) * cfg.sample_scale)));
  }
  void expect(std::string e) { r.expected = std::move(e); }
  bool finish(bool ok, std::string measured) {
    r.measured = std::move(measured);
    return ok;
  }
};

struct Check {
  const char* name;
  const char* origin;
  unsigned modes;
  std::function<bool(CheckContext&)> fn;
};

ZeroPattern make_pattern(std::initializer_list<int> ks) {
  ZeroPattern p;
  for (int k : ks) p.set(k);
  return p;
}

bool has_antipodal_pair(ZeroPattern p) {
  for (int k = 0; k < kNumPairs; ++k)
    if (p[k] && p[complement_index(k)]) return true;
  return false;
}

template <class S>
ProjectiveParam<S> param_for(BoundaryParam b) {
  switch (b) {
    case BoundaryParam::Zero: return ProjectiveParam<S>::zero();
    case BoundaryParam::One: return ProjectiveParam<S>::one();
    case BoundaryParam::Infinity: return ProjectiveParam<S>::infinity();
    case BoundaryParam::Any: break;
  }
  throw Error("no fixed parameter value for this stratum");
}

std::string groups_to_string(const std::vector<AbelianGroup>& g) {
  std::string out = "(";
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) out += ", ";
    out += group_to_string(g[i]);
  }
  return out + ")";
}

bool same_groups(const std::vector<AbelianGroup>& a, const std::vector<AbelianGroup>& b) {
  // Compare up to trailing trivial groups.
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    const AbelianGroup ga = i < a.size() ? a[i] : AbelianGroup{};
    const AbelianGroup gb = i < b.size() ? b[i] : AbelianGroup{};
    if (!(ga == gb)) return false;
  }
  return true;
}

// Sum of the fixed-point weight nu over a coordinate pair.
double pair_height(int k, const std::array<double, 4>& nu) {
  return nu[kPairs[k].a - 1] + nu[kPairs[k].b - 1];
}

// For chart K and coordinate slot i (0-based), the coordinate pair J whose
// Plücker coordinate is (up to sign) the chart coordinate a_{i+1}. Determined
// exactly by probing with a rational unit vector.
int chart_slot_pair(ChartId chart, int slot) {
  ChartCoords<GaussianRational> cc;
  cc.chart = chart;
  cc.a[slot] = GaussianRational(1);
  const Plucker<GaussianRational> p = plucker_coordinates(reconstruct(cc));
  for (int k = 0; k < kNumPairs; ++k) {
    if (k == chart.pair) continue;
    if (!(p[k] == GaussianRational(0))) return k;
  }
  throw Error("chart probe found no active coordinate pair");
}

// ---------------------------------------------------------------------------
// Check catalogue.
std::vector<Check> make_checks() {
  std::vector<Check> cs;
  auto add = [&cs](const char* name, const char* origin, unsigned modes,
                   std::function<bool(CheckContext&)> fn) {
    cs.push_back(Check{name, origin, modes, std::move(fn)});
  };

  // ---- census ------------------------------------------------------------
  add("census-admissible-count", "reference", kAllModes, [](CheckContext& c) {
    c.expect("36 admissible patterns out of 63 nonempty vertex sets");
    int adm = 0;
    for (unsigned m = 1; m < 64; ++m)
      if (is_admissible(ZeroPattern(m))) ++adm;
    const int table = int(admissible_table().size());
    return c.finish(adm == 36 && table == 36,
                    "admissible=" + std::to_string(adm) + " table=" + std::to_string(table));
  });

  add("census-kind-counts", "reference", kAllModes, [](CheckContext& c) {
    c.expect("vertex=6 edge=12 triangle=8 square=3 pyramid=6 octahedron=1");
    std::map<PolytopeKind, int> n;
    for (const auto& p : admissible_table()) ++n[p.kind];
    std::string got;
    bool ok = true;
    const std::pair<PolytopeKind, int> want[] = {
        {PolytopeKind::Vertex, 6},   {PolytopeKind::Edge, 12},    {PolytopeKind::Triangle, 8},
        {PolytopeKind::Square, 3},   {PolytopeKind::Pyramid, 6},  {PolytopeKind::Octahedron, 1}};
    for (const auto& [kind, count] : want) {
      if (!got.empty()) got += ' ';
      got += std::string(polytope_kind_name(kind)) + "=" + std::to_string(n[kind]);
      ok = ok && n[kind] == count;
    }
    return c.finish(ok, got);
  });

  add("census-dim-counts", "reference", kAllModes, [](CheckContext& c) {
    c.expect("polytope dims 0..3 have 6/12/11/7 strata");
    std::array<int, 4> n{};
    for (const auto& p : admissible_table()) ++n[p.dim];
    const bool ok = n == std::array<int, 4>{6, 12, 11, 7};
    return c.finish(ok, std::to_string(n[0]) + "/" + std::to_string(n[1]) + "/" +
                            std::to_string(n[2]) + "/" + std::to_string(n[3]));
  });

  add("census-stratum-dimensions", "reference", kAllModes, [](CheckContext& c) {
    c.expect("real dims 0/2/4/6/8 have 6/12/11/6/1 strata");
    std::map<int, int> n;
    for (const auto& p : admissible_table()) ++n[stratum_dimension(p)];
    std::string got;
    for (const auto& [d, k] : n) got += (got.empty() ? "" : " ") + std::to_string(d) + ":" + std::to_string(k);
    const bool ok = n == std::map<int, int>{{0, 6}, {2, 12}, {4, 11}, {6, 6}, {8, 1}};
    return c.finish(ok, got);
  });

  add("census-witness-existence", "oracle", kAllModes, [](CheckContext& c) {
    c.expect("witness frame exists exactly for the admissible patterns");
    int good = 0, bad = 0;
    for (unsigned m = 1; m < 64; ++m) {
      const ZeroPattern p(m);
      bool built = true;
      try {
        (void)stratum_witness_rows(p);
      } catch (const Error&) {
        built = false;
      }
      (built == is_admissible(p) ? good : bad)++;
    }
    return c.finish(bad == 0, std::to_string(good) + "/63 patterns agree");
  });

  add("census-affine-dims", "analytic", kAllModes, [](CheckContext& c) {
    c.expect("hull dims: vertex 0, antipodal pair 1, square 2, 5-set 3, octahedron 3");
    bool ok = pattern_affine_dim(make_pattern({0})) == 0;
    ok = ok && pattern_affine_dim(make_pattern({0, 5})) == 1;          // antipodal pair
    ok = ok && pattern_affine_dim(make_pattern({0, 1})) == 1;          // edge
    ok = ok && pattern_affine_dim(make_pattern({0, 1, 4, 5})) == 2;    // square
    ok = ok && pattern_affine_dim(make_pattern({0, 1, 2, 3, 4})) == 3; // pyramid
    ok = ok && pattern_affine_dim(ZeroPattern(63)) == 3;
    for (const auto& p : admissible_table())
      ok = ok && pattern_affine_dim(p.vertices) == p.dim;
    bool rejects = false;
    try {
      (void)classify_pattern(make_pattern({0, 5}));  // inadmissible: antipodal pair only
    } catch (const Error&) {
      rejects = true;
    }
    return c.finish(ok && rejects, ok ? "all hull dimensions as stated" : "mismatch");
  });

  add("census-facet-counts", "analytic", kAllModes, [](CheckContext& c) {
    c.expect("facets: octahedron 8, pyramid 5, square 4, triangle 3, edge 2, vertex 0");
    const std::map<PolytopeKind, int> want{
        {PolytopeKind::Octahedron, 8}, {PolytopeKind::Pyramid, 5}, {PolytopeKind::Square, 4},
        {PolytopeKind::Triangle, 3},   {PolytopeKind::Edge, 2},    {PolytopeKind::Vertex, 0}};
    int bad = 0;
    for (const auto& p : admissible_table())
      if (int(polytope_facets(p).size()) != want.at(p.kind)) ++bad;
    return c.finish(bad == 0, std::to_string(36 - bad) + "/36 polytopes");
  });

  add("census-face-closure", "analytic", kAllModes, [](CheckContext& c) {
    c.expect("all faces admissible; face counts octa 26, pyramid 18, square 8, triangle 6, edge 2, vertex 0");
    const std::map<PolytopeKind, int> want{
        {PolytopeKind::Octahedron, 26}, {PolytopeKind::Pyramid, 18}, {PolytopeKind::Square, 8},
        {PolytopeKind::Triangle, 6},    {PolytopeKind::Edge, 2},     {PolytopeKind::Vertex, 0}};
    int bad = 0;
    for (const auto& p : admissible_table()) {
      const auto faces = polytope_faces(p);
      if (int(faces.size()) != want.at(p.kind)) ++bad;
      for (const auto& f : faces)
        if (!is_admissible(f)) ++bad;
    }
    return c.finish(bad == 0, bad == 0 ? "face lattices closed" : std::to_string(bad) + " violations");
  });

  // ---- lattice -----------------------------------------------------------
  add("lattice-node-count", "reference", kAllModes, [](CheckContext& c) {
    c.expect("37 nodes (empty stratum + 36)");
    const auto& L = strata_lattice();
    return c.finish(L.nodes.size() == 37, std::to_string(L.nodes.size()) + " nodes");
  });

  add("lattice-cover-degrees", "analytic", kAllModes, [](CheckContext& c) {
    c.expect("empty=6 vertex=4 edge=3 triangle=3 square=2 pyramid=1 octahedron=0");
    const auto& L = strata_lattice();
    std::map<std::string, std::set<int>> seen;
    for (size_t i = 0; i < L.nodes.size(); ++i) {
      const auto& n = L.nodes[i];
      const std::string key = n.empty ? "empty" : polytope_kind_name(n.polytope.kind);
      seen[key].insert(L.out_degree(int(i)));
    }
    const std::map<std::string, int> want{{"empty", 6},  {"vertex", 4},   {"edge", 3},
                                          {"triangle", 3}, {"square", 2}, {"pyramid", 1},
                                          {"octahedron", 0}};
    bool ok = true;
    std::string got;
    for (const char* key : {"empty", "vertex", "edge", "triangle", "square", "pyramid", "octahedron"}) {
      const auto& degs = seen[key];
      ok = ok && degs.size() == 1 && *degs.begin() == want.at(key);
      if (!got.empty()) got += ' ';
      got += std::string(key) + "=";
      for (int d : degs) got += std::to_string(d) + ",";
      got.pop_back();
    }
    return c.finish(ok, got);
  });

  add("lattice-graded", "analytic", kAllModes, [](CheckContext& c) {
    c.expect("every cover step raises the stratum dimension by exactly 2 (empty covers dim-0)");
    const auto& L = strata_lattice();
    int bad = 0;
    for (const auto& n : L.nodes) {
      const int base = n.empty ? -2 : stratum_dimension(n.polytope);
      for (int up : n.covers) {
        const int top = stratum_dimension(L.nodes[up].polytope);
        if (top != base + 2) ++bad;
      }
    }
    return c.finish(bad == 0, bad == 0 ? "graded" : std::to_string(bad) + " bad cover steps");
  });

  add("lattice-vs-subset-order", "analytic", kAllModes, [](CheckContext& c) {
    c.expect("cover reachability coincides with vertex-set inclusion");
    const auto& L = strata_lattice();
    const int n = int(L.nodes.size());
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) reach[i][i] = true;
    // Repeated relaxation; the lattice is tiny.
    for (int pass = 0; pass < n; ++pass)
      for (int i = 0; i < n; ++i)
        for (int up : L.nodes[i].covers)
          for (int j = 0; j < n; ++j)
            if (reach[up][j] && !reach[i][j]) reach[i][j] = true;
    int bad = 0;
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        const auto a = L.nodes[i].polytope.vertices, b = L.nodes[j].polytope.vertices;
        const bool subset = (a & b) == a;
        if (reach[i][j] != subset) ++bad;
      }
    return c.finish(bad == 0, bad == 0 ? "orders agree" : std::to_string(bad) + " disagreements");
  });

  add("lattice-face-order-agrees", "analytic", kAllModes, [](CheckContext& c) {
    c.expect("below the top cell, admissible subsets = faces; in the full octahedron only the 6 pyramids and 3 squares are non-face subsets");
    int bad = 0, top_extras = 0;
    for (const auto& q : admissible_table()) {
      std::set<unsigned long> faces;
      for (const auto& f : polytope_faces(q)) faces.insert(f.to_ulong());
      for (const auto& p : admissible_table()) {
        if (p.vertices == q.vertices) continue;
        const bool subset = (p.vertices & q.vertices) == p.vertices;
        const bool face = faces.count(p.vertices.to_ulong()) > 0;
        if (subset == face) continue;
        // A face is always a subset; the only allowed mismatch is a
        // non-face subset of the top cell of dimension >= 2 that spans an
        // antipodal pair (pyramid or square).
        const bool allowed = subset && q.kind == PolytopeKind::Octahedron &&
                             (p.kind == PolytopeKind::Pyramid || p.kind == PolytopeKind::Square);
        if (allowed)
          ++top_extras;
        else
          ++bad;
      }
    }
    return c.finish(bad == 0 && top_extras == 9,
                    std::to_string(top_extras) + " non-face subsets, all at the top cell");
  });

  // ---- stabilizers ---------------------------------------------------------
  add("stab-dimensions", "reference", kAllModes, [](CheckContext& c) {
    c.expect("stabilizer dim = 4 - polytope dim (octa/pyramid 1, square/triangle 2, edge 3, vertex 4)");
    int bad = 0;
    for (const auto& p : admissible_table()) {
      const auto st = stabilizer_subtorus(p.vertices);
      if (st.dim != 4 - p.dim || int(st.basis.size()) != st.dim) ++bad;
    }
    return c.finish(bad == 0, std::to_string(36 - bad) + "/36 strata");
  });

  add("stab-weight-kernel", "definition", kAllModes, [](CheckContext& c) {
    c.expect("primitive basis; every basis vector pairs equally with all active vertices");
    int bad = 0;
    for (const auto& p : admissible_table()) {
      const auto st = stabilizer_subtorus(p.vertices);
      const auto verts = p.vertex_list();
      for (const auto& v : st.basis) {
        long g = 0;
        for (long x : v) g = std::gcd(g, std::abs(x));
        if (g != 1) ++bad;
        auto dot = [&v](int k) {
          const auto d = delta(k);
          long s = 0;
          for (int i = 0; i < 4; ++i) s += v[i] * d[i];
          return s;
        };
        const long base = dot(verts.front());
        for (int k : verts)
          if (dot(k) != base) ++bad;
      }
      // The basis must be linearly independent of full claimed rank.
      IntMatrix m(int(st.basis.size()), 4);
      for (int r = 0; r < m.rows; ++r)
        for (int col = 0; col < 4; ++col) m.at(r, col) = st.basis[r][col];
      if (integer_rank(m) != st.dim) ++bad;
    }
    return c.finish(bad == 0, bad == 0 ? "all kernels verified" : std::to_string(bad) + " violations");
  });

  add("stab-real-orders", "reference", kAllModes, [](CheckContext& c) {
    c.expect("real stabilizer order 2^(4 - polytope dim): octa/pyramid 2, square/triangle 4, edge 8, vertex 16");
    int bad = 0;
    for (const auto& p : admissible_table()) {
      const auto rs = real_stabilizer(p.vertices);
      if (rs.order != (1 << (4 - p.dim)) || (1 << rs.basis.size()) != rs.order) ++bad;
    }
    return c.finish(bad == 0, std::to_string(36 - bad) + "/36 strata");
  });

  add("witness-patterns", "oracle", kAllModes, [](CheckContext& c) {
    c.expect("each witness frame realizes exactly its own vanishing pattern");
    return with_scalar(c.cfg.mode, [&c]<class S>() {
      int bad = 0;
      for (const auto& p : admissible_table()) {
        const Frame<S> f = stratum_witness<S>(p.vertices);
        if (nonzero_pattern(plucker_coordinates(f, c.cfg.eps), c.cfg.eps) != p.vertices) ++bad;
      }
      return c.finish(bad == 0, std::to_string(36 - bad) + "/36 witnesses");
    });
  });

  // ---- plucker -------------------------------------------------------------
  add("plucker-relation-random", "analytic", kAllModes, [](CheckContext& c) {
    const int n = c.samples(1000);
    c.expect("relation residual <= 1e-12 relative on " + std::to_string(n) + " random frames (exact: 0)");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      using T = ScalarTraits<S>;
      double worst = 0;
      int bad = 0;
      for (int i = 0; i < n; ++i) {
        const Frame<S> f = random_frame<S>(c.rng, c.cfg.eps);
        const Plucker<S> p = plucker_coordinates(f, c.cfg.eps);
        const S rel = plucker_relation(p);
        if constexpr (T::exact) {
          if (!(rel == S(0))) ++bad;
        } else {
          const double scale = double(p.max_abs_sq());
          const double resid = std::sqrt(double(T::abs_sq(rel))) / scale;
          worst = std::max(worst, resid);
          if (resid > 1e-12) ++bad;
        }
      }
      if constexpr (T::exact)
        return c.finish(bad == 0, bad == 0 ? "identically zero" : std::to_string(bad) + " nonzero");
      else
        return c.finish(bad == 0, "max residual " + fmt(worst));
    });
  });

  add("plucker-gl2-covariance", "analytic", kAllModes, [](CheckContext& c) {
    const int n = c.samples(500);
    c.expect("column change scales all coordinates by the determinant");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      int bad = 0;
      for (int i = 0; i < n; ++i) {
        const Frame<S> f = random_frame<S>(c.rng, c.cfg.eps);
        const auto g = random_gl2<S>(c.rng, c.cfg.eps);
        const Plucker<S> p = plucker_coordinates(f, c.cfg.eps);
        const Plucker<S> q = plucker_coordinates(f.right_multiplied(g), c.cfg.eps);
        if (!proportional(p, q, c.cfg.eps)) ++bad;
        if constexpr (ScalarTraits<S>::exact) {
          const S det = g[0] * g[3] - g[1] * g[2];
          for (int k = 0; k < kNumPairs; ++k)
            if (!(q[k] == det * p[k])) ++bad;
        }
      }
      return c.finish(bad == 0, std::to_string(n - bad) + "/" + std::to_string(n) + " samples");
    });
  });

  add("plucker-torus-equivariance", "analytic", kAllModes, [](CheckContext& c) {
    const int n = c.samples(500);
    c.expect("coordinate for pair {i,j} scales by t_i t_j");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      using T = ScalarTraits<S>;
      int bad = 0;
      for (int i = 0; i < n; ++i) {
        const Frame<S> f = random_frame<S>(c.rng, c.cfg.eps);
        const TorusElement<S> t = random_torus_element<S>(c.rng);
        const Plucker<S> p = plucker_coordinates(f, c.cfg.eps);
        const Plucker<S> q = plucker_coordinates(torus_act(t, f), c.cfg.eps);
        const RealOf<S> scale = q.max_abs_sq();
        for (int k = 0; k < kNumPairs; ++k) {
          const S diff = q[k] - t.pair_weight(k) * p[k];
          if (!is_zero_rel<S>(T::abs_sq(diff), scale, c.cfg.eps)) ++bad;
        }
      }
      return c.finish(bad == 0, std::to_string(n - bad * 0) + " samples, " + std::to_string(bad) + " bad entries");
    });
  });

  add("plucker-rank-errors", "definition", kAllModes, [](CheckContext& c) {
    c.expect("rank-deficient frames and wrong charts raise typed errors");
    return with_scalar(c.cfg.mode, [&c]<class S>() {
      int ok = 0;
      Frame<S> r1;  // rank 1: identical rows
      for (int r = 0; r < 4; ++r) {
        r1(r, 0) = ScalarTraits<S>::from_int(1);
        r1(r, 1) = ScalarTraits<S>::from_int(2);
      }
      try {
        (void)plucker_coordinates(r1, c.cfg.eps);
      } catch (const RankDeficientError&) {
        ++ok;
      }
      Frame<S> z;  // zero frame
      try {
        (void)plucker_coordinates(z, c.cfg.eps);
      } catch (const RankDeficientError&) {
        ++ok;
      }
      // A point with vanishing {1,2} minor is outside chart M12.
      ZeroPattern missing12 = ZeroPattern(63);
      missing12.reset(0);
      const Frame<S> f = stratum_witness<S>(missing12);
      try {
        (void)to_chart(f, ChartId{0}, c.cfg.eps);
      } catch (const NotInChartError&) {
        ++ok;
      }
      return c.finish(ok == 3, std::to_string(ok) + "/3 errors raised");
    });
  });

  add("plucker-chart-roundtrip", "definition", kAllModes, [](CheckContext& c) {
    const int n = c.samples(200);
    c.expect("chart coordinates reconstruct the projective point in all six charts");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      int bad = 0;
      for (int i = 0; i < n; ++i) {
        const Frame<S> f = random_main_stratum_frame<S>(c.rng, c.cfg.eps);
        const Plucker<S> p = plucker_coordinates(f, c.cfg.eps);
        for (int k = 0; k < kNumPairs; ++k) {
          const auto cc = to_chart(f, ChartId{k}, c.cfg.eps);
          if (!proportional(p, plucker_coordinates(reconstruct(cc), c.cfg.eps), c.cfg.eps)) ++bad;
        }
      }
      return c.finish(bad == 0, std::to_string(bad) + " failed reconstructions of " + std::to_string(6 * n));
    });
  });

  // ---- charts --------------------------------------------------------------
  add("charts-transition-composition", "analytic", kAllModes, [](CheckContext& c) {
    const int n = c.samples(20);
    c.expect("transition maps compose to the identity on every chart pair");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      int bad = 0;
      for (int i = 0; i < n; ++i) {
        ProjectiveParam<S> p{random_scalar<S>(c.rng), random_scalar<S>(c.rng)};
        if (is_zero_rel<S>(ScalarTraits<S>::abs_sq(p.num), ScalarTraits<S>::abs_sq(p.den) + RealOf<S>(1), c.cfg.eps))
          p.num = ScalarTraits<S>::from_int(1);
        for (int a = 0; a < kNumPairs; ++a)
          for (int b = 0; b < kNumPairs; ++b) {
            const auto fwd = chart_param_transition(p, ChartId{a}, ChartId{b});
            const auto back = chart_param_transition(fwd, ChartId{b}, ChartId{a});
            if (!back.equals(p, c.cfg.eps)) ++bad;
          }
      }
      return c.finish(bad == 0, std::to_string(bad) + " failed round trips of " + std::to_string(36 * n));
    });
  });

  add("charts-transition-vs-direct", "oracle", kAllModes, [](CheckContext& c) {
    const int n = c.samples(100);
    c.expect("transported hypersurface parameter matches the parameter computed in the target chart");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      int bad = 0;
      for (int i = 0; i < n; ++i) {
        const Frame<S> f = random_main_stratum_frame<S>(c.rng, c.cfg.eps);
        const auto d12 = orbit_descriptor(to_chart(f, ChartId{0}, c.cfg.eps), c.cfg.eps);
        if (d12.kind != OrbitKind::Hypersurface || !d12.param) continue;
        for (int k = 0; k < kNumPairs; ++k) {
          const auto dk = orbit_descriptor(to_chart(f, ChartId{k}, c.cfg.eps), c.cfg.eps);
          if (dk.kind != OrbitKind::Hypersurface || !dk.param) {
            ++bad;
            continue;
          }
          const auto moved = chart_param_transition(*d12.param, ChartId{0}, ChartId{k});
          if (!moved.equals(*dk.param, c.cfg.eps)) ++bad;
        }
      }
      return c.finish(bad == 0, std::to_string(bad) + " mismatches of " + std::to_string(6 * n));
    });
  });

  add("charts-m12-m13-values", "reference", kAllModes, [](CheckContext& c) {
    c.expect("M12 -> M13 sends c to c/(c-1): 3 -> 3/2, -1 -> 1/2, 0 -> 0, inf -> 1");
    return with_scalar(c.cfg.mode, [&c]<class S>() {
      auto mk = [](long num, long den) {
        return ProjectiveParam<S>{ScalarTraits<S>::from_int(num), ScalarTraits<S>::from_int(den)};
      };
      const ChartId m12{0}, m13{1};
      bool ok = chart_param_transition(mk(3, 1), m12, m13).equals(mk(3, 2), c.cfg.eps);
      ok = ok && chart_param_transition(mk(-1, 1), m12, m13).equals(mk(1, 2), c.cfg.eps);
      ok = ok && chart_param_transition(mk(0, 1), m12, m13).equals(mk(0, 1), c.cfg.eps);
      ok = ok && chart_param_transition(mk(1, 0), m12, m13).equals(mk(1, 1), c.cfg.eps);
      return c.finish(ok, ok ? "all four values" : "mismatch");
    });
  });

  // ---- moment ----------------------------------------------------------------
  add("moment-hypersimplex", "definition", kAllModes, [](CheckContext& c) {
    const int n = c.samples(1000);
    c.expect("image lies in [0,1]^4 with coordinate sum 2");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      int bad = 0;
      for (int i = 0; i < n; ++i) {
        const Frame<S> f = random_frame<S>(c.rng, c.cfg.eps);
        if (!moment_g42(plucker_coordinates(f, c.cfg.eps)).valid(1e-12)) ++bad;
        std::array<S, kNumPairs> z;
        for (S& v : z) v = random_scalar<S>(c.rng);
        z[0] = ScalarTraits<S>::from_int(1);  // keep the vector nonzero
        if (!moment_cp5(z).valid(1e-12)) ++bad;
      }
      return c.finish(bad == 0, std::to_string(bad) + " points left the hypersimplex");
    });
  });

  add("moment-vertex-values", "analytic", kAllModes, [](CheckContext& c) {
    c.expect("vertex stratum witnesses map exactly to the hypersimplex vertices");
    return with_scalar(c.cfg.mode, [&c]<class S>() {
      int bad = 0;
      for (int k = 0; k < kNumPairs; ++k) {
        const Frame<S> f = stratum_witness<S>(make_pattern({k}));
        const auto mu = moment_g42(plucker_coordinates(f, c.cfg.eps));
        const auto d = delta(k);
        for (int i = 0; i < 4; ++i) {
          if constexpr (ScalarTraits<S>::exact) {
            if (!(mu[i] == d[i])) ++bad;
          } else {
            if (std::abs(double(mu[i]) - d[i]) > 1e-15) ++bad;
          }
        }
      }
      return c.finish(bad == 0, std::to_string(bad) + " bad coordinates");
    });
  });

  add("moment-diag-identity", "oracle", kFloating, [](CheckContext& c) {
    const int n = c.samples(1000);
    c.expect("diag(A A^H) of an orthonormalized frame equals the moment image, inf-norm <= 1e-12");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      if constexpr (ScalarTraits<S>::exact) {
        return false;  // unreachable: mode mask excludes exact scalars
      } else {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
          const Frame<S> f = random_orthonormal_frame<S>(c.rng);
          const auto mu = moment_g42(plucker_coordinates(f, c.cfg.eps));
          const auto diag = diag_projection(f, c.cfg.eps);
          for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(diag[j] - mu[j]));
        }
        return c.finish(worst <= 1e-12, "max deviation " + fmt(worst));
      }
    });
  });

  add("moment-torus-invariance", "analytic", kAllModes, [](CheckContext& c) {
    const int n = c.samples(500);
    c.expect("unit-modulus torus elements preserve the moment image");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      int bad = 0;
      double worst = 0;
      for (int i = 0; i < n; ++i) {
        const Frame<S> f = random_frame<S>(c.rng, c.cfg.eps);
        const TorusElement<S> t = random_torus_element<S>(c.rng, /*unit_modulus=*/true);
        const auto a = moment_g42(plucker_coordinates(f, c.cfg.eps));
        const auto b = moment_g42(plucker_coordinates(torus_act(t, f), c.cfg.eps));
        for (int j = 0; j < 4; ++j) {
          if constexpr (ScalarTraits<S>::exact) {
            if (!(a[j] == b[j])) ++bad;
          } else {
            worst = std::max(worst, std::abs(double(a[j]) - double(b[j])));
          }
        }
      }
      if constexpr (ScalarTraits<S>::exact)
        return c.finish(bad == 0, std::to_string(bad) + " changed coordinates");
      else
        return c.finish(worst <= 1e-12, "max deviation " + fmt(worst));
    });
  });

  add("moment-octahedron-geometry", "analytic", kAllModes, [](CheckContext& c) {
    c.expect("6 vertices on the plane, 12 edges of squared length 2, 8 triangular facets");
    const auto verts = Hypersimplex::vertices();
    bool ok = verts.size() == 6;
    for (const auto& v : verts) {
      int s = 0;
      for (int x : v) s += x;
      ok = ok && s == 2;
    }
    const auto edges = Hypersimplex::edges();
    ok = ok && edges.size() == 12;
    for (const auto& e : edges) {
      int d2 = 0;
      for (int i = 0; i < 4; ++i) {
        const int diff = verts[e[0]][i] - verts[e[1]][i];
        d2 += diff * diff;
      }
      ok = ok && d2 == 2;
    }
    ok = ok && Hypersimplex::facets().size() == 8;
    return c.finish(ok, ok ? "6 vertices / 12 edges / 8 facets" : "mismatch");
  });

  add("cone-factorization", "analytic", kFloating, [](CheckContext& c) {
    const int n = c.samples(50);
    c.expect("chart moment map factors through the cone coordinates, residual <= 1e-9");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      if constexpr (ScalarTraits<S>::exact) {
        return false;  // unreachable by mode mask
      } else {
        double worst = 0;
        bool weights_ok = true;
        for (int k = 0; k < kNumPairs; ++k)
          for (int i = 0; i < n; ++i) {
            ChartCoords<S> cc;
            cc.chart = ChartId{k};
            for (S& v : cc.a) v = random_scalar<S>(c.rng);
            const auto rep = cone_factorization_check(cc);
            worst = std::max(worst, rep.residual);
            weights_ok = weights_ok && rep.weights == kConeModelWeights;
            for (double x : rep.xi) weights_ok = weights_ok && x >= 0;
          }
        return c.finish(worst <= 1e-9 && weights_ok, "max residual " + fmt(worst));
      }
    });
  });

  // ---- orbits ----------------------------------------------------------------
  add("orbit-param-consistency", "oracle", kAllModes, [](CheckContext& c) {
    const int n = c.samples(300);
    c.expect("chart-coordinate parameter equals the coordinate-product parameter");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      int bad = 0;
      for (int i = 0; i < n; ++i) {
        const Frame<S> f = random_main_stratum_frame<S>(c.rng, c.cfg.eps);
        const auto d = orbit_descriptor(to_chart(f, ChartId{0}, c.cfg.eps), c.cfg.eps);
        const auto cr = cross_ratio(f, c.cfg.eps);
        if (d.kind != OrbitKind::Hypersurface || !d.param || !cr) {
          ++bad;
          continue;
        }
        if (!d.param->equals(*cr, c.cfg.eps)) ++bad;
      }
      return c.finish(bad == 0, std::to_string(n - bad) + "/" + std::to_string(n) + " agree");
    });
  });

  add("orbit-kind-dims", "analytic", kAllModes, [](CheckContext& c) {
    c.expect("chart orbit dimension matches the stratum dimension (6 inside the open stratum)");
    return with_scalar(c.cfg.mode, [&c]<class S>() {
      int bad = 0, tested = 0;
      for (const auto& p : admissible_table()) {
        if (!p.vertices[0]) continue;  // stratum must meet chart M12
        ++tested;
        const Frame<S> f = random_point_in_stratum<S>(p.vertices, c.rng, c.cfg.eps);
        const auto d = orbit_descriptor(to_chart(f, ChartId{0}, c.cfg.eps), c.cfg.eps);
        const int want = p.vertices.all() ? 6 : stratum_dimension(p);
        if (d.dim_real != want) ++bad;
        if (p.vertices.all() && d.kind != OrbitKind::Hypersurface) ++bad;
        if (p.vertices.count() == 1 && d.kind != OrbitKind::FixedPoint) ++bad;
      }
      return c.finish(bad == 0, std::to_string(tested) + " strata tested, " + std::to_string(bad) + " mismatches");
    });
  });

  add("orbit-cross-ratio-invariance", "analytic", kAllModes, [](CheckContext& c) {
    const int n = c.samples(500);
    c.expect("parameter is constant along torus orbits and column changes");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      int bad = 0;
      for (int i = 0; i < n; ++i) {
        const Frame<S> f = random_main_stratum_frame<S>(c.rng, c.cfg.eps);
        const auto base = cross_ratio(f, c.cfg.eps);
        const TorusElement<S> t = random_torus_element<S>(c.rng);
        const auto moved = cross_ratio(torus_act(t, f), c.cfg.eps);
        const auto recol = cross_ratio(f.right_multiplied(random_gl2<S>(c.rng, c.cfg.eps)), c.cfg.eps);
        if (!base || !moved || !recol) {
          ++bad;
          continue;
        }
        if (!base->equals(*moved, c.cfg.eps) || !base->equals(*recol, c.cfg.eps)) ++bad;
      }
      return c.finish(bad == 0, std::to_string(n - bad) + "/" + std::to_string(n) + " invariant");
    });
  });

  add("orbit-cross-ratio-indeterminate", "analytic", kAllModes, [](CheckContext& c) {
    c.expect("parameter is indeterminate exactly on strata without an antipodal vertex pair");
    return with_scalar(c.cfg.mode, [&c]<class S>() {
      int bad = 0;
      for (const auto& p : admissible_table()) {
        const Frame<S> f = stratum_witness<S>(p.vertices);
        const bool defined = cross_ratio(f, c.cfg.eps).has_value();
        if (defined != has_antipodal_pair(p.vertices)) ++bad;
      }
      return c.finish(bad == 0, std::to_string(36 - bad) + "/36 strata");
    });
  });

  add("orbit-boundary-values", "oracle", kAllModes, [](CheckContext& c) {
    c.expect("pyramid/square boundary parameters: missing {14}/{23} -> 0, {13}/{24} -> inf, {12}/{34} -> 1");
    return with_scalar(c.cfg.mode, [&c]<class S>() {
      int bad = 0, tested = 0;
      for (const auto& p : admissible_table()) {
        if (p.kind != PolytopeKind::Pyramid && p.kind != PolytopeKind::Square) continue;
        ++tested;
        const Stratum s{p, stratum_dimension(p)};
        const BoundaryParam bp = boundary_parameter(s);
        if (bp == BoundaryParam::Any) {
          ++bad;
          continue;
        }
        // Independent route: evaluate the parameter on the witness itself.
        const auto cr = cross_ratio(stratum_witness<S>(p.vertices), c.cfg.eps);
        if (!cr || !cr->equals(param_for<S>(bp), c.cfg.eps)) ++bad;
        // The frozen table, keyed by the first missing coordinate pair.
        int missing = -1;
        for (int k = 0; k < kNumPairs && missing < 0; ++k)
          if (!p.vertices[k]) missing = k;
        const BoundaryParam want =
            (missing == 2 || missing == 3) ? BoundaryParam::Zero
            : (missing == 1 || missing == 4) ? BoundaryParam::Infinity
                                             : BoundaryParam::One;
        if (bp != want) ++bad;
      }
      return c.finish(bad == 0 && tested == 9, std::to_string(tested) + " strata tested, " +
                                                   std::to_string(bad) + " mismatches");
    });
  });

  add("orbit-boundary-any", "definition", kAllModes, [](CheckContext& c) {
    c.expect("triangles/edges/vertices carry a free parameter; the open stratum refuses a limit value");
    int bad = 0;
    for (const auto& p : admissible_table()) {
      const Stratum s{p, stratum_dimension(p)};
      if (p.kind == PolytopeKind::Octahedron) {
        try {
          (void)boundary_parameter(s);
          ++bad;
        } catch (const Error&) {
        }
        continue;
      }
      const bool any = boundary_parameter(s) == BoundaryParam::Any;
      const bool want_any = p.kind == PolytopeKind::Vertex || p.kind == PolytopeKind::Edge ||
                            p.kind == PolytopeKind::Triangle;
      if (any != want_any) ++bad;
    }
    return c.finish(bad == 0, std::to_string(bad) + " misclassified strata");
  });

  add("orbit-boundary-limits", "oracle", kFloating, [](CheckContext& c) {
    c.expect("deterministic paths into pyramid/square strata converge to the stated parameter, distance < 1e-6");
    const auto woct = stratum_witness_rows(ZeroPattern(63));
    double worst = 0;
    int bad = 0, paths = 0;
    for (const auto& p : admissible_table()) {
      if (p.kind != PolytopeKind::Pyramid && p.kind != PolytopeKind::Square) continue;
      ++paths;
      const auto w0 = stratum_witness_rows(p.vertices);
      const auto expected = param_for<Complex>(boundary_parameter(Stratum{p, stratum_dimension(p)}));
      double prev = -1, last = -1;
      bool shrinks = true;
      for (int nstep = 8; nstep <= 24; nstep += 4) {
        const double t = std::ldexp(1.0, -nstep);
        Frame<Complex> f;
        for (int r = 0; r < 4; ++r)
          for (int col = 0; col < 2; ++col)
            f(r, col) = Complex((1 - t) * w0[r][col] + t * woct[r][col], 0.0);
        const auto cr = cross_ratio(f, c.cfg.eps);
        if (!cr) {
          shrinks = false;
          break;
        }
        last = chordal_distance(*cr, expected);
        if (prev >= 0 && last > prev) shrinks = false;
        prev = last;
      }
      worst = std::max(worst, last);
      if (!(shrinks && last >= 0 && last < 1e-6)) ++bad;
    }
    return c.finish(bad == 0 && paths == 9,
                    std::to_string(paths) + " paths, worst final distance " + fmt(worst));
  });

  add("orbit-closure-list", "analytic", kAllModes, [](CheckContext& c) {
    c.expect("dense-orbit boundary: pairs {12,13,24,34}, four singles, fixed point; {14}/{23} excluded");
    return with_scalar(c.cfg.mode, [&c]<class S>() {
      const Frame<S> f = random_main_stratum_frame<S>(c.rng, c.cfg.eps);
      const auto d = orbit_descriptor(to_chart(f, ChartId{0}, c.cfg.eps), c.cfg.eps);
      const auto bd = closure_boundary(d);
      std::set<unsigned long> got;
      for (const auto& b : bd)
        got.insert(b.kind == OrbitKind::FixedPoint ? 0ul : b.I.to_ulong());
      const std::set<unsigned long> want{0b0011, 0b0101, 0b1010, 0b1100, 0b0001, 0b0010, 0b0100, 0b1000, 0};
      bool ok = bd.size() == 9 && got == want;
      // Two-coordinate orbits drop to singles and the fixed point.
      OrbitDescriptor<S> two;
      two.chart = ChartId{0};
      two.kind = OrbitKind::CStar;
      two.I = std::bitset<4>(0b0011);
      two.dim_real = 4;
      const auto bd2 = closure_boundary(two);
      ok = ok && bd2.size() == 3;
      OrbitDescriptor<S> fp;
      fp.chart = ChartId{0};
      ok = ok && closure_boundary(fp).empty();
      return c.finish(ok, std::to_string(bd.size()) + " boundary orbits for the dense case");
    });
  });

  add("orbit-closure-limits", "oracle", kFloating, [](CheckContext& c) {
    const int n = c.samples(3);
    c.expect("torus degenerations realize every boundary orbit of the dense orbit and nothing else");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      if constexpr (ScalarTraits<S>::exact) {
        return false;  // unreachable by mode mask
      } else {
        // Weight vectors (w1..w4) with w1 w4 = w2 w3, s -> 0; the surviving
        // coordinate set is where w stays of order one.
        const double s = std::ldexp(1.0, -40), s2 = s * s;
        const std::array<std::array<double, 4>, 9> degen{{{s, s, 1, 1},
                                                          {1, 1, s, s},
                                                          {s, 1, s, 1},
                                                          {1, s, 1, s},
                                                          {1, s, s, s2},
                                                          {s, 1, s2, s},
                                                          {s, s2, 1, s},
                                                          {s2, s, s, 1},
                                                          {s, s, s, s}}};
        int bad = 0;
        for (int trial = 0; trial < n; ++trial) {
          const Frame<S> f = random_main_stratum_frame<S>(c.rng, c.cfg.eps);
          const auto cc = to_chart(f, ChartId{0}, c.cfg.eps);
          const auto base = orbit_descriptor(cc, c.cfg.eps);
          std::set<unsigned long> want{};
          for (const auto& b : closure_boundary(base))
            want.insert(b.kind == OrbitKind::FixedPoint ? 0ul : b.I.to_ulong());
          std::set<unsigned long> got;
          for (const auto& w : degen) {
            ChartCoords<S> scaled = cc;
            for (int i = 0; i < 4; ++i) scaled.a[i] = scaled.a[i] * S(w[i]);
            const auto d = orbit_descriptor(scaled, c.cfg.eps);
            got.insert(d.kind == OrbitKind::FixedPoint ? 0ul : d.I.to_ulong());
          }
          if (got != want) ++bad;
        }
        return c.finish(bad == 0, std::to_string(n - bad) + "/" + std::to_string(n) +
                                      " trials hit all nine boundary orbits");
      }
    });
  });

  add("orbit-closure-kinds", "reference", kAllModes, [](CheckContext& c) {
    c.expect("closures: vertex point, edge P^1, triangle P^2, square P^1 x P^1, pyramid/octahedron singular with 1/6 singular points");
    int bad = 0;
    for (const auto& p : admissible_table()) {
      const auto rep = classify_closure(Stratum{p, stratum_dimension(p)});
      switch (p.kind) {
        case PolytopeKind::Vertex:
          if (rep.kind != ClosureKind::Point || rep.singular_point_count != 0) ++bad;
          break;
        case PolytopeKind::Edge:
          if (rep.kind != ClosureKind::CP1) ++bad;
          break;
        case PolytopeKind::Triangle:
          if (rep.kind != ClosureKind::CP2) ++bad;
          break;
        case PolytopeKind::Square:
          if (rep.kind != ClosureKind::CP1xCP1) ++bad;
          break;
        case PolytopeKind::Pyramid:
          if (rep.kind != ClosureKind::SingularToric6 || rep.singular_point_count != 1) ++bad;
          break;
        case PolytopeKind::Octahedron:
          if (rep.kind != ClosureKind::SingularToric6 || rep.singular_point_count != 6) ++bad;
          break;
      }
    }
    return c.finish(bad == 0, std::to_string(36 - bad) + "/36 strata");
  });

  add("orbit-local-models", "reference", kAllModes, [](CheckContext& c) {
    c.expect("quotient charts by polytope dim 3/2/1/0: smooth, D^2 x cone(S^2), D^1 x cone(S^5/T^2), cone(S^7/T^3); real forms analogous");
    const LocalModelKind complex_want[4] = {LocalModelKind::ConeS7modT3, LocalModelKind::D1xConeS5modT2,
                                            LocalModelKind::D2xConeS2, LocalModelKind::Smooth};
    const LocalModelKind real_want[4] = {LocalModelKind::ConeS3modZ2cube, LocalModelKind::D1xConeS2modZ2sq,
                                         LocalModelKind::D1xConeRP1, LocalModelKind::RealSmooth};
    int bad = 0;
    for (const auto& p : admissible_table()) {
      const auto mc = local_model(p.vertices, /*real_form=*/false);
      const auto mr = local_model(p.vertices, /*real_form=*/true);
      if (mc.k != p.dim || mc.stabilizer_dim != 4 - p.dim) ++bad;
      if (mc.model != complex_want[p.dim] || mr.model != real_want[p.dim]) ++bad;
    }
    return c.finish(bad == 0, std::to_string(36 - bad) + "/36 strata");
  });

  // ---- rank functions ---------------------------------------------------------
  add("rank-definition-equivalence", "oracle", kAllModes, [](CheckContext& c) {
    const int n = c.samples(150);
    c.expect("coordinate pair {i,j} vanishes iff the quotient rank of the complementary pair drops below 2");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      int bad = 0;
      const auto& table = admissible_table();
      for (int i = 0; i < n; ++i) {
        const auto& p = table[size_t(i) % table.size()];
        const Frame<S> f = random_point_in_stratum<S>(p.vertices, c.rng, c.cfg.eps);
        const ZeroPattern pat = nonzero_pattern(plucker_coordinates(f, c.cfg.eps), c.cfg.eps);
        for (int k = 0; k < kNumPairs; ++k) {
          const IndexPair comp = complement(kPairs[k]);
          const unsigned mask = (1u << (comp.a - 1)) | (1u << (comp.b - 1));
          const bool full = rank_function(f, mask, c.cfg.eps) == 2;
          if (pat[k] != full) ++bad;
        }
      }
      return c.finish(bad == 0, std::to_string(bad) + " disagreements over " + std::to_string(6 * n) + " pairs");
    });
  });

  add("rank-profile-monotone", "definition", kAllModes, [](CheckContext& c) {
    const int n = c.samples(60);
    c.expect("rank is monotone under inclusion, bounded by min(|J|, 2), and 2 on the full set");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      int bad = 0;
      const auto& table = admissible_table();
      for (int i = 0; i < n; ++i) {
        const auto& p = table[size_t(i) % table.size()];
        const Frame<S> f = random_point_in_stratum<S>(p.vertices, c.rng, c.cfg.eps);
        const auto prof = rank_profile(f, c.cfg.eps);
        if (prof[0] != 0 || prof[15] != 2) ++bad;
        for (unsigned m = 0; m < 16; ++m) {
          const int size = __builtin_popcount(m);
          if (prof[m] < 0 || prof[m] > std::min(size, 2)) ++bad;
          for (int b = 0; b < 4; ++b)
            if (!(m & (1u << b)) && prof[m | (1u << b)] < prof[m]) ++bad;
        }
      }
      return c.finish(bad == 0, std::to_string(bad) + " violations");
    });
  });

  // ---- ambient projective space ------------------------------------------------
  add("cp5-weight-example", "reference", kAllModes, [](CheckContext& c) {
    c.expect("t=(2,1,1,1) acts on (1,...,1) as (2,2,2,1,1,1)");
    return with_scalar(c.cfg.mode, [&c]<class S>() {
      TorusElement<S> t;
      t.t[0] = ScalarTraits<S>::from_int(2);
      CP5Point<S> z;
      for (S& v : z.z) v = ScalarTraits<S>::from_int(1);
      const auto w = symmetric_square_act(t, z);
      const long want[6] = {2, 2, 2, 1, 1, 1};
      int bad = 0;
      for (int k = 0; k < kNumPairs; ++k) {
        const S diff = w.z[k] - ScalarTraits<S>::from_int(want[k]);
        if (!is_zero_rel<S>(ScalarTraits<S>::abs_sq(diff), RealOf<S>(1), c.cfg.eps)) ++bad;
      }
      return c.finish(bad == 0, bad == 0 ? "(2,2,2,1,1,1)" : "mismatch");
    });
  });

  add("cp5-diagonal-scalar-trivial", "analytic", kAllModes, [](CheckContext& c) {
    const int n = c.samples(200);
    c.expect("diagonal torus elements act trivially on the projective space");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      int bad = 0;
      for (int i = 0; i < n; ++i) {
        CP5Point<S> z;
        for (S& v : z.z) v = random_scalar<S>(c.rng);
        z.z[0] = z.z[0] + ScalarTraits<S>::from_int(1);
        TorusElement<S> t;
        const S lam = random_unit_scale<S>(c.rng);
        for (S& v : t.t) v = lam;
        if (!proportional(symmetric_square_act(t, z), z, c.cfg.eps)) ++bad;
      }
      return c.finish(bad == 0, std::to_string(n - bad) + "/" + std::to_string(n) + " trivial");
    });
  });

  add("cp5-embedding-equivariance", "analytic", kAllModes, [](CheckContext& c) {
    const int n = c.samples(300);
    c.expect("the coordinate embedding intertwines the two torus actions");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      int bad = 0;
      for (int i = 0; i < n; ++i) {
        const Frame<S> f = random_frame<S>(c.rng, c.cfg.eps);
        const TorusElement<S> t = random_torus_element<S>(c.rng);
        const auto lhs = plucker_embed(plucker_coordinates(torus_act(t, f), c.cfg.eps));
        const auto rhs = symmetric_square_act(t, plucker_embed(plucker_coordinates(f, c.cfg.eps)));
        if (!proportional(lhs, rhs, c.cfg.eps)) ++bad;
      }
      return c.finish(bad == 0, std::to_string(n - bad) + "/" + std::to_string(n) + " commute");
    });
  });

  add("cp5-fixed-points", "analytic", kAllModes, [](CheckContext& c) {
    c.expect("coordinate points are torus-fixed; no other indicator point is");
    return with_scalar(c.cfg.mode, [&c]<class S>() {
      int bad = 0;
      for (unsigned m = 1; m < 64; ++m) {
        CP5Point<S> z;
        for (int k = 0; k < kNumPairs; ++k)
          z.z[k] = ScalarTraits<S>::from_int((m >> k) & 1u ? 1 : 0);
        bool fixed = true;
        for (int trial = 0; trial < 10 && fixed; ++trial) {
          const TorusElement<S> t = random_torus_element<S>(c.rng);
          fixed = proportional(symmetric_square_act(t, z), z, c.cfg.eps);
        }
        if (fixed != (__builtin_popcount(m) == 1)) ++bad;
      }
      return c.finish(bad == 0, std::to_string(63 - bad) + "/63 indicator points");
    });
  });

  add("cp5-stratification-compat", "oracle", kAllModes, [](CheckContext& c) {
    const int n = c.samples(150);
    c.expect("ambient stratum of an embedded point has the same vertices and polytope dimension");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      int bad = 0;
      const auto& table = admissible_table();
      for (int i = 0; i < n; ++i) {
        const auto& p = table[size_t(i) % table.size()];
        const Frame<S> f = random_point_in_stratum<S>(p.vertices, c.rng, c.cfg.eps);
        const auto rep = cp5_stratum(plucker_embed(plucker_coordinates(f, c.cfg.eps)), c.cfg.eps);
        if (rep.vertices != p.vertices || rep.polytope_dim != p.dim) ++bad;
      }
      return c.finish(bad == 0, std::to_string(n - bad) + "/" + std::to_string(n) + " consistent");
    });
  });

  add("cp5-ambient-census", "analytic", kAllModes, [](CheckContext& c) {
    c.expect("all 63 nonempty vertex sets occur as ambient strata (36 from the subvariety, 27 off it)");
    return with_scalar(c.cfg.mode, [&c]<class S>() {
      int bad = 0, off = 0;
      for (unsigned m = 1; m < 64; ++m) {
        CP5Point<S> z;
        for (int k = 0; k < kNumPairs; ++k)
          z.z[k] = ScalarTraits<S>::from_int((m >> k) & 1u ? 1 : 0);
        const auto rep = cp5_stratum(z, c.cfg.eps);
        if (rep.vertices != ZeroPattern(m)) ++bad;
        if (rep.polytope_dim != pattern_affine_dim(ZeroPattern(m))) ++bad;
        if (!is_admissible(ZeroPattern(m))) ++off;
      }
      return c.finish(bad == 0 && off == 27,
                      std::to_string(63 - bad) + "/63 realized, " + std::to_string(off) + " off the subvariety");
    });
  });

  add("cp5-param-invariance", "analytic", kAllModes, [](CheckContext& c) {
    const int n = c.samples(300);
    c.expect("the orbit parameter triple is constant along torus orbits");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      int bad = 0;
      for (int i = 0; i < n; ++i) {
        CP5Point<S> z;
        for (S& v : z.z) v = random_scalar<S>(c.rng);
        z.z[1] = z.z[1] + ScalarTraits<S>::from_int(1);
        const TorusElement<S> t = random_torus_element<S>(c.rng);
        const auto a = orbit_parameter_triple(z, c.cfg.eps);
        const auto b = orbit_parameter_triple(symmetric_square_act(t, z), c.cfg.eps);
        if (a.has_value() != b.has_value()) {
          ++bad;
          continue;
        }
        if (a && !a->equals(*b, c.cfg.eps)) ++bad;
      }
      return c.finish(bad == 0, std::to_string(n - bad) + "/" + std::to_string(n) + " invariant");
    });
  });

  add("cp5-param-separation", "oracle", kAllModes, [](CheckContext& c) {
    const int n = c.samples(50);
    c.expect("points with different parameter triples have disjoint sampled orbits");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      int bad = 0, tested = 0;
      for (int i = 0; i < n; ++i) {
        CP5Point<S> x, y;
        for (S& v : x.z) v = random_scalar<S>(c.rng);
        for (S& v : y.z) v = random_scalar<S>(c.rng);
        x.z[0] = x.z[0] + ScalarTraits<S>::from_int(1);
        y.z[5] = y.z[5] + ScalarTraits<S>::from_int(1);
        const auto a = orbit_parameter_triple(x, c.cfg.eps);
        const auto b = orbit_parameter_triple(y, c.cfg.eps);
        if (!a || !b || a->equals(*b, c.cfg.eps)) continue;
        ++tested;
        for (int trial = 0; trial < 10; ++trial) {
          const TorusElement<S> t = random_torus_element<S>(c.rng);
          if (proportional(symmetric_square_act(t, x), y, c.cfg.eps)) ++bad;
        }
      }
      return c.finish(bad == 0 && tested > 0,
                      std::to_string(tested) + " separated pairs, " + std::to_string(bad) + " collisions");
    });
  });

  add("cp5-main-examples", "reference", kAllModes, [](CheckContext& c) {
    c.expect("(1:...:1) -> (1:1:1); last coordinate 0 -> (1:1:0); a coordinate point has no parameter");
    return with_scalar(c.cfg.mode, [&c]<class S>() {
      auto mk = [](std::initializer_list<long> vals) {
        CP5Point<S> z;
        int k = 0;
        for (long v : vals) z.z[k++] = ScalarTraits<S>::from_int(v);
        return z;
      };
      auto triple_is = [&c](const std::optional<ProjectiveTriple<S>>& t,
                            std::array<long, 3> want) {
        if (!t) return false;
        ProjectiveTriple<S> w;
        for (int i = 0; i < 3; ++i) w.c[i] = ScalarTraits<S>::from_int(want[i]);
        return t->equals(w, c.cfg.eps);
      };
      bool ok = triple_is(orbit_parameter_triple(mk({1, 1, 1, 1, 1, 1}), c.cfg.eps), {1, 1, 1});
      ok = ok && triple_is(orbit_parameter_triple(mk({1, 1, 1, 1, 1, 0}), c.cfg.eps), {1, 1, 0});
      ok = ok && !orbit_parameter_triple(mk({1, 0, 0, 0, 0, 0}), c.cfg.eps).has_value();
      return c.finish(ok, ok ? "all three examples" : "mismatch");
    });
  });

  add("cp5-quadric-membership", "analytic", kAllModes, [](CheckContext& c) {
    const int n = c.samples(100);
    c.expect("embedded points satisfy the quadric; (1,0,0,0,0,1) does not");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      int bad = 0;
      for (int i = 0; i < n; ++i) {
        const Frame<S> f = random_frame<S>(c.rng, c.cfg.eps);
        if (!is_on_plucker_quadric(plucker_embed(plucker_coordinates(f, c.cfg.eps)), c.cfg.eps)) ++bad;
      }
      CP5Point<S> off;
      off.z[0] = ScalarTraits<S>::from_int(1);
      off.z[5] = ScalarTraits<S>::from_int(1);
      if (is_on_plucker_quadric(off, c.cfg.eps)) ++bad;
      CP5Point<S> vertex;
      vertex.z[0] = ScalarTraits<S>::from_int(1);
      if (!is_on_plucker_quadric(vertex, c.cfg.eps)) ++bad;
      return c.finish(bad == 0, std::to_string(bad) + " membership errors");
    });
  });

  add("embed-oracle-selection", "oracle", kAllModes, [](CheckContext& c) {
    const int n = c.samples(20);
    c.expect("direct embedding formula matches the frame-built oracle on every sample; the alternate form never does");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      using T = ScalarTraits<S>;
      int direct = 0, alternate = 0;
      for (int i = 0; i < n; ++i) {
        ProjectiveParam<S> p{random_scalar<S>(c.rng), random_scalar<S>(c.rng)};
        // Keep the parameter away from 0, 1, -1 and infinity, where the two
        // candidate formulas coincide.
        const RealOf<S> lo(1e-4);
        auto degenerate = [&]() {
          const S d1 = p.num - p.den, d2 = p.num + p.den;
          return T::abs_sq(p.num) < lo || T::abs_sq(p.den) < lo || T::abs_sq(d1) < lo ||
                 T::abs_sq(d2) < lo;
        };
        while (degenerate()) {
          p.num = random_scalar<S>(c.rng);
          p.den = random_scalar<S>(c.rng);
        }
        const auto oracle = embedding_oracle(p, c.cfg.eps);
        if (induced_embedding(p).equals(oracle, c.cfg.eps)) ++direct;
        if (induced_embedding_alternate(p).equals(oracle, c.cfg.eps)) ++alternate;
      }
      return c.finish(direct == n && alternate == 0,
                      "direct " + std::to_string(direct) + "/" + std::to_string(n) + ", alternate " +
                          std::to_string(alternate) + "/" + std::to_string(n));
    });
  });

  add("embed-boundary-values", "oracle", kAllModes, [](CheckContext& c) {
    c.expect("witness triples of pyramid/square strata equal the embedded boundary parameter");
    return with_scalar(c.cfg.mode, [&c]<class S>() {
      int bad = 0, tested = 0;
      for (const auto& p : admissible_table()) {
        if (p.kind != PolytopeKind::Pyramid && p.kind != PolytopeKind::Square) continue;
        ++tested;
        const auto bp = boundary_parameter(Stratum{p, stratum_dimension(p)});
        const auto want = induced_embedding(param_for<S>(bp));
        const Frame<S> f = stratum_witness<S>(p.vertices);
        const auto tri = orbit_parameter_triple(plucker_embed(plucker_coordinates(f, c.cfg.eps)), c.cfg.eps);
        if (!tri || !tri->equals(want, c.cfg.eps)) ++bad;
      }
      return c.finish(bad == 0 && tested == 9,
                      std::to_string(tested) + " strata, " + std::to_string(bad) + " mismatches");
    });
  });

  // ---- homology ------------------------------------------------------------
  add("homology-building-blocks", "reference", kAllModes, [](CheckContext& c) {
    c.expect("interval, S^1, S^2, T^2, RP^2, CP^2 have their standard groups");
    auto str = [](const ChainComplex& x) { return groups_to_string(cellular_homology(x)); };
    ChainComplex interval{"interval", {2, 1}, {IntMatrix(0, 2), IntMatrix(2, 1)}};
    interval.boundary[1].at(0, 0) = -1;
    interval.boundary[1].at(1, 0) = 1;
    ChainComplex torus{"torus", {1, 2, 1}, {IntMatrix(0, 1), IntMatrix(1, 2), IntMatrix(2, 1)}};
    bool ok = str(interval) == "(Z, 0)";
    ok = ok && str(sphere_complex(1)) == "(Z, Z)";
    ok = ok && str(sphere_complex(2)) == "(Z, 0, Z)";
    ok = ok && str(torus) == "(Z, Z^2, Z)";
    ok = ok && str(real_projective_plane_complex()) == "(Z, Z/2, 0)";
    ok = ok && str(complex_projective_complex(2)) == "(Z, 0, Z, 0, Z)";
    return c.finish(ok, ok ? "all six standard complexes" : "mismatch");
  });

  add("homology-smith-forms", "analytic", kAllModes, [](CheckContext& c) {
    c.expect("[[2,4],[6,8]] -> (2,4); diag(2,3) -> (1,6); zero matrix -> ()");
    IntMatrix a(2, 2);
    a.at(0, 0) = 2;
    a.at(0, 1) = 4;
    a.at(1, 0) = 6;
    a.at(1, 1) = 8;
    IntMatrix b(2, 2);
    b.at(0, 0) = 2;
    b.at(1, 1) = 3;
    IntMatrix z(2, 2);
    const bool ok = smith_invariants(a) == std::vector<long>{2, 4} &&
                    smith_invariants(b) == std::vector<long>{1, 6} &&
                    smith_invariants(z).empty() && integer_rank(a) == 2 && integer_rank(z) == 0;
    return c.finish(ok, ok ? "all invariant factors" : "mismatch");
  });

  add("homology-validate", "definition", kAllModes, [](CheckContext& c) {
    c.expect("models validate; a non-complex raises the typed error");
    for (const ModelSpace s : {ModelSpace::G42, ModelSpace::CP5, ModelSpace::RealG42, ModelSpace::RealP5})
      build_orbit_space_model(s).validate();
    ChainComplex broken{"broken", {1, 1, 1}, {IntMatrix(0, 1), IntMatrix(1, 1), IntMatrix(1, 1)}};
    broken.boundary[1].at(0, 0) = 1;
    broken.boundary[2].at(0, 0) = 1;
    bool threw = false;
    try {
      broken.validate();
    } catch (const NotAComplexError&) {
      threw = true;
    }
    return c.finish(threw, threw ? "four models valid, broken complex rejected" : "broken complex accepted");
  });

  add("homology-model-g42", "reference", kAllModes, [](CheckContext& c) {
    c.expect("(Z, 0, 0, 0, 0, Z) from cells in dims 0,2,3,5");
    const auto m = build_orbit_space_model(ModelSpace::G42);
    const bool cells_ok = m.cells == std::vector<int>{1, 0, 1, 1, 0, 1};
    const auto h = cellular_homology(m);
    const std::vector<AbelianGroup> want{{1, {}}, {}, {}, {}, {}, {1, {}}};
    return c.finish(cells_ok && same_groups(h, want), groups_to_string(h));
  });

  add("homology-model-cp5", "reference", kAllModes, [](CheckContext& c) {
    c.expect("(Z, 0, 0, 0, 0, Z, 0, Z) from cells in dims 0,2,3,5,7");
    const auto m = build_orbit_space_model(ModelSpace::CP5);
    const bool cells_ok = m.cells == std::vector<int>{1, 0, 1, 1, 0, 1, 0, 1};
    const auto h = cellular_homology(m);
    const std::vector<AbelianGroup> want{{1, {}}, {}, {}, {}, {}, {1, {}}, {}, {1, {}}};
    return c.finish(cells_ok && same_groups(h, want), groups_to_string(h));
  });

  add("homology-model-real-g42", "reference", kAllModes, [](CheckContext& c) {
    c.expect("(Z, 0, 0, 0, Z): the real quotient is a 4-sphere");
    const auto h = cellular_homology(build_orbit_space_model(ModelSpace::RealG42));
    const std::vector<AbelianGroup> want{{1, {}}, {}, {}, {}, {1, {}}};
    return c.finish(same_groups(h, want), groups_to_string(h));
  });

  add("homology-model-real-p5", "reference", kAllModes, [](CheckContext& c) {
    c.expect("(Z, 0, 0, 0, Z/2, 0)");
    const auto h = cellular_homology(build_orbit_space_model(ModelSpace::RealP5));
    const std::vector<AbelianGroup> want{{1, {}}, {}, {}, {}, {0, {2}}, {}};
    return c.finish(same_groups(h, want), groups_to_string(h));
  });

  add("homology-join-oracle", "oracle", kAllModes, [](CheckContext& c) {
    c.expect("each model matches the join of S^2 with its fiber; the first equals S^5");
    bool ok = true;
    std::string got;
    for (const ModelSpace s : {ModelSpace::G42, ModelSpace::CP5, ModelSpace::RealG42, ModelSpace::RealP5}) {
      const auto direct = cellular_homology(build_orbit_space_model(s));
      const auto join = orbit_space_join_oracle(s);
      ok = ok && same_groups(direct, join);
      if (!got.empty()) got += "; ";
      got += std::string(model_space_name(s)) + (same_groups(direct, join) ? " agrees" : " DIFFERS");
    }
    ok = ok && same_groups(orbit_space_join_oracle(ModelSpace::G42), cellular_homology(sphere_complex(5)));
    return c.finish(ok, got);
  });

  add("homology-euler", "analytic", kAllModes, [](CheckContext& c) {
    c.expect("Euler characteristics 0, -1, 2, 1 agree between cells and homology ranks");
    const std::array<std::pair<ModelSpace, int>, 4> want{{{ModelSpace::G42, 0},
                                                          {ModelSpace::CP5, -1},
                                                          {ModelSpace::RealG42, 2},
                                                          {ModelSpace::RealP5, 1}}};
    bool ok = true;
    std::string got;
    for (const auto& [space, chi] : want) {
      const auto m = build_orbit_space_model(space);
      int from_cells = 0;
      for (size_t d = 0; d < m.cells.size(); ++d) from_cells += (d % 2 ? -1 : 1) * m.cells[d];
      int from_h = 0;
      const auto h = cellular_homology(m);
      for (size_t d = 0; d < h.size(); ++d) from_h += (d % 2 ? -1 : 1) * h[d].rank;
      ok = ok && from_cells == chi && from_h == chi;
      if (!got.empty()) got += ' ';
      got += std::string(model_space_name(space)) + "=" + std::to_string(from_cells);
    }
    return c.finish(ok, got);
  });

  add("homology-admissible-complex", "reference", kAllModes, [](CheckContext& c) {
    c.expect("per-dim cells 6/12/11/7 with the open cell, 6/12/11/6 without; faces index-valid");
    const auto full = build_admissible_complex(true);
    const auto bd = build_admissible_complex(false);
    bool ok = true;
    std::array<int, 4> nf{}, nb{};
    for (int d = 0; d < 4; ++d) {
      nf[d] = full.cell_count(d);
      nb[d] = bd.cell_count(d);
    }
    ok = ok && nf == std::array<int, 4>{6, 12, 11, 7} && nb == std::array<int, 4>{6, 12, 11, 6};
    ok = ok && full.chi.size() == full.cells.size();
    for (size_t i = 0; i < full.cells.size(); ++i)
      for (int j : full.facets[i])
        ok = ok && j >= 0 && j < int(full.cells.size()) &&
             full.cells[j].dim == full.cells[i].dim - 1;
    return c.finish(ok, std::to_string(nf[0]) + "/" + std::to_string(nf[1]) + "/" + std::to_string(nf[2]) +
                            "/" + std::to_string(nf[3]) + " with open cell");
  });

  add("homology-chi-monotone", "analytic", kAllModes, [](CheckContext& c) {
    c.expect("the stabilizer label of a face contains the stabilizer of every cell it bounds");
    const auto cx = build_admissible_complex(true);
    int bad = 0;
    for (size_t q = 0; q < cx.cells.size(); ++q) {
      const auto& big = cx.chi[q];
      for (int pi : cx.faces[q]) {
        const auto& small = cx.chi[pi];
        // Stack both bases; the rank must stay that of the face's stabilizer.
        IntMatrix m(int(small.basis.size() + big.basis.size()), 4);
        int r = 0;
        for (const auto& v : small.basis) {
          for (int col = 0; col < 4; ++col) m.at(r, col) = v[col];
          ++r;
        }
        for (const auto& v : big.basis) {
          for (int col = 0; col < 4; ++col) m.at(r, col) = v[col];
          ++r;
        }
        if (integer_rank(m) != small.dim) ++bad;
      }
    }
    return c.finish(bad == 0, std::to_string(bad) + " containment failures");
  });

  // ---- height function --------------------------------------------------------
  add("morse-critical-values", "analytic", kComplex, [](CheckContext& c) {
    c.expect("fixed-point values (3, 5, 9, 6, 10, 12), pairwise distinct");
    const auto rep = build_morse_report();
    const std::array<double, 6> want{3, 5, 9, 6, 10, 12};
    bool ok = rep.values_distinct;
    std::string got;
    for (int k = 0; k < 6; ++k) {
      ok = ok && std::abs(rep.critical_values[k] - want[k]) <= 1e-12;
      if (!got.empty()) got += ", ";
      got += fmt(rep.critical_values[k]);
    }
    return c.finish(ok, got);
  });

  add("morse-critical-gradient", "analytic", kComplex, [](CheckContext& c) {
    c.expect("numerical gradient at all six fixed points below 1e-6");
    const auto rep = build_morse_report();
    double worst = 0;
    for (double g : rep.origin_grad_norm) worst = std::max(worst, g);
    return c.finish(worst <= 1e-6, "max gradient norm " + fmt(worst));
  });

  add("morse-noncritical-gradient", "analytic", kComplex, [](CheckContext& c) {
    const int n = c.samples(100);
    c.expect("gradient exceeds 1e-6 away from the fixed points");
    double least = 1e300;
    for (int i = 0; i < n; ++i) {
      const ChartId chart{int(c.rng.uniform_int(0, kNumPairs - 1))};
      std::array<Complex, 4> a;
      double biggest = 0;
      do {
        for (auto& v : a) v = random_scalar<Complex>(c.rng);
        biggest = 0;
        for (const auto& v : a) biggest = std::max(biggest, std::abs(v));
      } while (biggest < 0.5);
      least = std::min(least, morse_gradient_check(chart, a).grad_norm);
    }
    return c.finish(least > 1e-6, "min gradient norm " + fmt(least));
  });

  add("morse-hessian-analytic", "analytic", kComplex, [](CheckContext& c) {
    c.expect("numerical Hessian pairs match 2*(height(adjacent) - height(chart)) within 1e-3");
    const auto rep = build_morse_report();
    double worst = 0, iso = 0;
    for (int k = 0; k < kNumPairs; ++k) {
      const ChartId chart{k};
      const auto fd = morse_gradient_check(chart, {});
      for (int i = 0; i < 4; ++i) {
        const int j = chart_slot_pair(chart, i);
        const double want = 2.0 * (pair_height(j, rep.nu) - pair_height(k, rep.nu));
        worst = std::max(worst, std::abs(fd.hessian_pairs[i] - want));
        iso = std::max(iso, std::abs(fd.hessian_diag[2 * i] - fd.hessian_diag[2 * i + 1]));
      }
    }
    const bool ok = worst <= 1e-3 && iso <= 1e-3 && rep.nondegenerate;
    return c.finish(ok, "max |fd - analytic| " + fmt(worst) + ", max re/im split " + fmt(iso));
  });

  add("morse-index-spectrum", "analytic", kComplex, [](CheckContext& c) {
    c.expect("fixed-point indices {0, 2, 4, 4, 6, 8}: one generator per even homology degree of the full space");
    const auto rep = build_morse_report();
    std::multiset<int> indices;
    for (int k = 0; k < kNumPairs; ++k) {
      const ChartId chart{k};
      int neg = 0;
      for (int i = 0; i < 4; ++i) {
        const int j = chart_slot_pair(chart, i);
        if (pair_height(j, rep.nu) < pair_height(k, rep.nu)) ++neg;
      }
      indices.insert(2 * neg);
    }
    const std::multiset<int> want{0, 2, 4, 4, 6, 8};
    std::string got;
    for (int i : indices) got += (got.empty() ? "" : ",") + std::to_string(i);
    return c.finish(indices == want, "{" + got + "}");
  });

  add("morse-center-value", "analytic", kComplex, [](CheckContext& c) {
    c.expect("the balanced point maps to the barycenter: value 7.5; unit torus leaves the value fixed");
    const Frame<Complex> f = Frame<Complex>::from_rows(
        {{{Complex(1), Complex(0)}, {Complex(0), Complex(1)}, {Complex(1), Complex(0)}, {Complex(0), Complex(1)}}});
    const double v = morse_value(f);
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
      const Frame<Complex> g = random_frame<Complex>(c.rng, c.cfg.eps);
      const TorusElement<Complex> t = random_torus_element<Complex>(c.rng, true);
      worst = std::max(worst, std::abs(morse_value(g) - morse_value(torus_act(t, g))));
    }
    return c.finish(std::abs(v - 7.5) <= 1e-12 && worst <= 1e-12,
                    "value " + fmt(v) + ", max torus drift " + fmt(worst));
  });

  // ---- scalar arithmetic --------------------------------------------------------
  add("scalar-rational-parse", "definition", kAllModes, [](CheckContext& c) {
    c.expect("strings parse to canonical rationals; arithmetic identities hold exactly");
    bool ok = rational_string(parse_rational("4/6")) == "2/3";
    ok = ok && parse_rational("-3/7") == Rational(-3, 7);
    ok = ok && parse_rational("22/7") * parse_rational("7/22") == 1;
    ok = ok && Rational(1, 3) + Rational(1, 6) == Rational(1, 2);
    const GaussianRational z{Rational(2), Rational(3)};
    ok = ok && z * ScalarTraits<GaussianRational>::conj(z) == GaussianRational(13);
    bool threw = false;
    try {
      (void)parse_rational("seven");
    } catch (const InputError&) {
      threw = true;
    }
    return c.finish(ok && threw, ok ? "identities hold, bad input rejected" : "mismatch");
  });

  add("scalar-division-inverse", "definition", kAllModes, [](CheckContext& c) {
    const int n = c.samples(100);
    c.expect("z * (1/z) = 1 for random nonzero Gaussian rationals");
    Rng rng(c.cfg.seed);
    int bad = 0;
    for (int i = 0; i < n; ++i) {
      GaussianRational z = random_scalar<GaussianRational>(rng);
      if (z == GaussianRational(0)) z = GaussianRational(1);
      if (!(z * (GaussianRational(1) / z) == GaussianRational(1))) ++bad;
    }
    return c.finish(bad == 0, std::to_string(n - bad) + "/" + std::to_string(n) + " exact inverses");
  });

  // ---- serialization -------------------------------------------------------------
  add("io-frame-roundtrip", "definition", kAllModes, [](CheckContext& c) {
    const int n = c.samples(50);
    c.expect("frame -> JSON text -> frame is the identity");
    return with_scalar(c.cfg.mode, [&]<class S>() {
      int bad = 0;
      for (int i = 0; i < n; ++i) {
        const Frame<S> f = random_frame<S>(c.rng, c.cfg.eps);
        const Frame<S> g = frame_from_json<S>(parse_json_text(frame_to_json(f).dump()));
        for (int j = 0; j < 8; ++j)
          if (!(f.m[j] == g.m[j])) ++bad;
      }
      return c.finish(bad == 0, std::to_string(bad) + " entries changed");
    });
  });

  add("io-pattern-roundtrip", "definition", kAllModes, [](CheckContext& c) {
    c.expect("vertex sets and moment points serialize losslessly");
    bool ok = true;
    for (const auto& p : admissible_table())
      ok = ok && pattern_from_json(pattern_to_json(p.vertices)) == p.vertices;
    MomentPoint<double> mu;
    mu.x = {0.25, 0.75, 0.5, 0.5};
    const auto j = moment_to_json(mu);
    ok = ok && j.is_array() && j.size() == 4 && j[0].get<double>() == 0.25;
    return c.finish(ok, ok ? "36 patterns + moment point" : "mismatch");
  });

  add("io-parse-errors", "definition", kAllModes, [](CheckContext& c) {
    c.expect("malformed input raises typed errors with a diagnostic message");
    int ok = 0;
    try {
      (void)parse_json_text("[1, 2");
    } catch (const InputError& e) {
      if (std::string(e.what()).find("JSON") != std::string::npos) ++ok;
    }
    try {
      (void)frame_from_json<double>(parse_json_text("{\"rows\": [[1, 2]]}"));
    } catch (const InputError&) {
      ++ok;
    }
    try {
      (void)pattern_from_json(parse_json_text("[\"99\"]"));
    } catch (const InputError&) {
      ++ok;
    }
    return c.finish(ok == 3, std::to_string(ok) + "/3 rejected");
  });

  add("io-scalar-mode-guards", "definition", kAllModes, [](CheckContext& c) {
    c.expect("real mode rejects nonzero imaginary parts; exact mode rejects non-integral floats");
    int ok = 0;
    try {
      (void)scalar_from_json<double>(parse_json_text("[1.0, 0.5]"));
    } catch (const InputError&) {
      ++ok;
    }
    try {
      (void)scalar_from_json<GaussianRational>(parse_json_text("1.5"));
    } catch (const InputError&) {
      ++ok;
    }
    const Complex z = scalar_from_json<Complex>(parse_json_text("[1.0, 0.5]"));
    if (z == Complex(1.0, 0.5)) ++ok;
    const GaussianRational q = scalar_from_json<GaussianRational>(parse_json_text("[\"2/4\", \"0\"]"));
    if (q == GaussianRational(Rational(1, 2))) ++ok;
    return c.finish(ok == 4, std::to_string(ok) + "/4 behaviors");
  });

  return cs;
}

}  // namespace

int VerificationReport::failures() const {
  int n = 0;
  for (const auto& c : checks)
    if (!c.pass && !c.skipped) ++n;
  return n;
}

int VerificationReport::passed() const {
  int n = 0;
  for (const auto& c : checks)
    if (c.pass) ++n;
  return n;
}

int VerificationReport::skipped() const {
  int n = 0;
  for (const auto& c : checks)
    if (c.skipped) ++n;
  return n;
}

VerificationReport run_verification(const RunConfig& config) {
  VerificationReport rep;
  rep.config = config;
  const unsigned bit = mode_bit(config.mode);
  for (const Check& chk : make_checks()) {
    CheckResult res;
    res.name = chk.name;
    res.origin = chk.origin;
    if (!(chk.modes & bit)) {
      res.skipped = true;
      res.pass = false;
      res.measured = "not applicable to scalar mode " + std::string(scalar_mode_name(config.mode));
      rep.checks.push_back(std::move(res));
      continue;
    }
    CheckContext ctx(config, res);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      res.pass = chk.fn(ctx);
    } catch (const std::exception& e) {
      res.pass = false;
      res.measured = std::string("exception: ") + e.what();
    }
    res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.checks.push_back(std::move(res));
  }
  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return rep;
}

std::string report_text(const VerificationReport& rep) {
  std::ostringstream out;
  out << "verification: scalar=" << scalar_mode_name(rep.config.mode) << " seed=" << rep.config.seed
      << " eps=" << fmt(rep.config.eps) << " sample-scale=" << fmt(rep.config.sample_scale) << "\n";
  for (const auto& c : rep.checks) {
    if (c.skipped) {
      out << "SKIP " << c.name << ": " << c.measured << "\n";
      continue;
    }
    if (c.pass) {
      out << "PASS " << c.name << " (" << fmt(c.ms) << " ms)\n";
    } else {
      out << "FAIL " << c.name << ": measured " << c.measured << "; expected " << c.expected << " ["
          << c.origin << "]\n";
    }
  }
  out << (rep.failures() == 0 ? "OK" : "FAILED") << ": " << rep.passed() << " passed, "
      << rep.failures() << " failed, " << rep.skipped() << " skipped\n";
  return out.str();
}

nlohmann::json report_json(const VerificationReport& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"skipped", c.skipped},
                      {"measured", c.measured},
                      {"expected", c.expected},
                      {"origin", c.origin},
                      {"ms", c.ms}});
  }
  return {{"config",
           {{"scalar", scalar_mode_name(rep.config.mode)},
            {"seed", rep.config.seed},
            {"eps", rep.config.eps},
            {"sample_scale", rep.config.sample_scale}}},
          {"checks", checks},
          {"summary",
           {{"passed", rep.passed()}, {"failed", rep.failures()}, {"skipped", rep.skipped()}}}};
}

}  // namespace gt42
