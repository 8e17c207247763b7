#include <doctest.h>

#include <map>
#include <set>

#include "gt42/random.hpp"
#include "gt42/strata.hpp"

using namespace gt42;

namespace {

ZeroPattern make_pattern(std::initializer_list<const char*> pairs) {
  ZeroPattern p;
  for (const char* s : pairs) p.set(parse_pair(s));
  return p;
}

}  // namespace

TEST_SUITE("strata") {
  TEST_CASE("census: 36 admissible vertex subsets") {
    int admissible = 0;
    std::map<PolytopeKind, int> by_kind;
    std::map<int, int> by_dim;
    for (unsigned long bits = 1; bits < 64; ++bits) {
      const ZeroPattern pat(bits);
      if (!is_admissible(pat)) continue;
      ++admissible;
      const AdmissiblePolytope p = classify_pattern(pat);
      ++by_kind[p.kind];
      ++by_dim[p.dim];
    }
    CHECK(admissible == 36);
    CHECK(by_kind[PolytopeKind::Vertex] == 6);
    CHECK(by_kind[PolytopeKind::Edge] == 12);
    CHECK(by_kind[PolytopeKind::Triangle] == 8);
    CHECK(by_kind[PolytopeKind::Square] == 3);
    CHECK(by_kind[PolytopeKind::Pyramid] == 6);
    CHECK(by_kind[PolytopeKind::Octahedron] == 1);
    CHECK(by_dim[0] == 6);
    CHECK(by_dim[1] == 12);
    CHECK(by_dim[2] == 11);
    CHECK(by_dim[3] == 7);
    CHECK(admissible_table().size() == 36);
  }

  TEST_CASE("antipodal diagonals and their extensions are not admissible") {
    CHECK_FALSE(is_admissible(make_pattern({"12", "34"})));
    CHECK_FALSE(is_admissible(make_pattern({"13", "24"})));
    CHECK_FALSE(is_admissible(make_pattern({"14", "23"})));
    // A triangle through the interior (contains an antipodal pair).
    CHECK_FALSE(is_admissible(make_pattern({"12", "34", "13"})));
    CHECK_FALSE(is_admissible(ZeroPattern{}));
    CHECK_THROWS_AS(classify_pattern(make_pattern({"12", "34"})), NotAdmissibleError);
    CHECK_THROWS_AS(classify_pattern(ZeroPattern{}), NotAdmissibleError);
  }

  TEST_CASE("admissibility is: no antipodal pair, or at least five vertices") {
    for (unsigned long bits = 1; bits < 64; ++bits) {
      const ZeroPattern pat(bits);
      bool antipodal = false;
      for (int k = 0; k < 3; ++k)
        if (pat[k] && pat[complement_index(k)]) antipodal = true;
      const bool expect = !antipodal || pat.count() >= 5 ||
                          (pat.count() == 4 && [&] {
                            // squares: exactly two antipodal pairs of vertices
                            int pairs = 0;
                            for (int k = 0; k < 3; ++k)
                              if (pat[k] && pat[complement_index(k)]) ++pairs;
                            return pairs == 2;
                          }());
      CHECK(is_admissible(pat) == expect);
    }
  }

  TEST_CASE("names and affine dimensions") {
    CHECK(classify_pattern(ZeroPattern(63)).name() == "octahedron");
    CHECK(classify_pattern(ZeroPattern(63) & ~make_pattern({"12"})).name() == "P12");
    CHECK(classify_pattern(make_pattern({"13", "14", "23", "24"})).name() == "P12,34");
    CHECK(classify_pattern(make_pattern({"14", "24", "34"})).name() == "T14.24.34");
    CHECK(classify_pattern(make_pattern({"12", "13"})).name() == "E12.13");
    CHECK(classify_pattern(make_pattern({"24"})).name() == "V24");
    CHECK(pattern_affine_dim(ZeroPattern(63)) == 3);
    CHECK(pattern_affine_dim(make_pattern({"12", "34"})) == 1);  // interior diagonal
    CHECK(pattern_affine_dim(make_pattern({"12"})) == 0);
  }

  TEST_CASE("stratum dimensions: open stratum 8, others twice the polytope dim") {
    std::map<int, int> strata_by_dim;
    for (const AdmissiblePolytope& p : admissible_table())
      ++strata_by_dim[stratum_dimension(p)];
    CHECK(strata_by_dim[8] == 1);
    CHECK(strata_by_dim[6] == 6);
    CHECK(strata_by_dim[4] == 11);
    CHECK(strata_by_dim[2] == 12);
    CHECK(strata_by_dim[0] == 6);
  }

  TEST_CASE("face counts by kind") {
    for (const AdmissiblePolytope& p : admissible_table()) {
      const auto facets = polytope_facets(p);
      const auto faces = polytope_faces(p);
      size_t expect_facets = 0, expect_faces = 0;
      switch (p.kind) {
        case PolytopeKind::Octahedron: expect_facets = 8; expect_faces = 26; break;
        case PolytopeKind::Pyramid: expect_facets = 5; expect_faces = 18; break;
        case PolytopeKind::Square: expect_facets = 4; expect_faces = 8; break;
        case PolytopeKind::Triangle: expect_facets = 3; expect_faces = 6; break;
        case PolytopeKind::Edge: expect_facets = 2; expect_faces = 2; break;
        case PolytopeKind::Vertex: expect_facets = 0; expect_faces = 0; break;
      }
      CHECK(facets.size() == expect_facets);
      CHECK(faces.size() == expect_faces);
      for (const ZeroPattern& f : faces) CHECK(is_admissible(f));
      for (const ZeroPattern& f : facets) CHECK((f & ~p.vertices).none());
    }
  }

  TEST_CASE("lattice: 37 nodes graded by polytope dimension") {
    const StrataLattice& L = strata_lattice();
    REQUIRE(L.nodes.size() == 37);
    CHECK(L.nodes[0].empty);
    CHECK(L.out_degree(0) == 6);  // empty stratum is covered by the six vertices
    std::map<PolytopeKind, std::set<int>> degrees;
    for (size_t n = 1; n < L.nodes.size(); ++n)
      degrees[L.nodes[n].polytope.kind].insert(L.out_degree(int(n)));
    CHECK(degrees[PolytopeKind::Vertex] == std::set<int>{4});
    CHECK(degrees[PolytopeKind::Edge] == std::set<int>{3});
    CHECK(degrees[PolytopeKind::Triangle] == std::set<int>{3});
    CHECK(degrees[PolytopeKind::Square] == std::set<int>{2});
    CHECK(degrees[PolytopeKind::Pyramid] == std::set<int>{1});
    CHECK(degrees[PolytopeKind::Octahedron] == std::set<int>{0});
  }

  TEST_CASE("lattice covers: minimal strict supersets, two stratum dimensions up") {
    // The grading is by stratum dimension: every cover gains exactly two real
    // dimensions. (Polytope dimension is NOT a grading: the five-vertex to
    // six-vertex step keeps the polytope three-dimensional.)
    const StrataLattice& L = strata_lattice();
    const auto& table = admissible_table();
    for (size_t n = 0; n < L.nodes.size(); ++n) {
      const auto& node = L.nodes[n];
      for (int c : node.covers) {
        const auto& up = L.nodes[c].polytope;
        if (node.empty) {
          CHECK(up.dim == 0);
          continue;
        }
        CHECK(stratum_dimension(up) == stratum_dimension(node.polytope) + 2);
        const ZeroPattern lo = node.polytope.vertices;
        const ZeroPattern hi = up.vertices;
        CHECK((lo & ~hi).none());
        CHECK(lo != hi);
        // Minimality: no admissible pattern strictly between the two.
        for (const AdmissiblePolytope& mid : table) {
          const ZeroPattern m = mid.vertices;
          const bool between = (lo & ~m).none() && (m & ~hi).none() && m != lo && m != hi;
          CHECK_FALSE(between);
        }
      }
    }
    CHECK(L.node_of(ZeroPattern(63)) == 36);
    CHECK(L.node_of(make_pattern({"12", "34"})) == -1);
  }

  TEST_CASE("stabilizer subtorus dimension complements the polytope dimension") {
    for (const AdmissiblePolytope& p : admissible_table()) {
      const StabilizerSubtorus st = stabilizer_subtorus(p.vertices);
      CHECK(st.dim == 4 - p.dim);
      CHECK(int(st.basis.size()) == st.dim);
      for (const auto& v : st.basis) {
        // Pairing <v, delta_J> constant over the polytope's vertices.
        long first = 0;
        bool have = false;
        for (int k = 0; k < kNumPairs; ++k) {
          if (!p.vertices[k]) continue;
          long pairing = 0;
          const auto d = delta(k);
          for (int i = 0; i < 4; ++i) pairing += v[i] * d[i];
          if (!have) {
            first = pairing;
            have = true;
          } else {
            CHECK(pairing == first);
          }
        }
      }
    }
    // Dense stratum: the diagonal circle.
    const StabilizerSubtorus diag = stabilizer_subtorus(ZeroPattern(63));
    REQUIRE(diag.basis.size() == 1);
    CHECK(diag.basis[0] == std::array<long, 4>{1, 1, 1, 1});
  }

  TEST_CASE("real stabilizer orders are 2^(4 - polytope dim)") {
    for (const AdmissiblePolytope& p : admissible_table()) {
      const RealStabilizer rs = real_stabilizer(p.vertices);
      CHECK(rs.order == (1 << (4 - p.dim)));
      CHECK(int(rs.basis.size()) == 4 - p.dim);
    }
  }

  TEST_CASE("witness frames hit their strata exactly") {
    for (const AdmissiblePolytope& p : admissible_table()) {
      const auto f = stratum_witness<GaussianRational>(p.vertices);
      CHECK(nonzero_pattern(plucker_coordinates(f)) == p.vertices);
      const Stratum s = stratum_of(f);
      CHECK(s.polytope == p);
      CHECK(s.dim_real == stratum_dimension(p));
    }
  }

  TEST_CASE("random stratum points keep their pattern") {
    Rng rng(23);
    for (const AdmissiblePolytope& p : admissible_table()) {
      const auto f = random_point_in_stratum<GaussianRational>(p.vertices, rng);
      CHECK(nonzero_pattern(plucker_coordinates(f)) == p.vertices);
    }
  }

  TEST_CASE("rank function agrees with minor vanishing") {
    Rng rng(29);
    for (const AdmissiblePolytope& p : admissible_table()) {
      const auto f = random_point_in_stratum<GaussianRational>(p.vertices, rng);
      for (int k = 0; k < kNumPairs; ++k) {
        const IndexPair c = complement(kPairs[k]);
        const unsigned mask = (1u << (c.a - 1)) | (1u << (c.b - 1));
        CHECK(p.vertices[k] == (rank_function(f, mask) == 2));
      }
      CHECK(rank_function(f, 0xFu) == 2);
      CHECK(rank_function(f, 0u) == 0);
    }
  }

  TEST_CASE("rank profile is monotone under subset inclusion") {
    Rng rng(31);
    const auto f = random_frame<Complex>(rng);
    const auto prof = rank_profile(f);
    for (unsigned m = 0; m < 16; ++m)
      for (int j = 0; j < 4; ++j) {
        if (m & (1u << j)) continue;
        const unsigned bigger = m | (1u << j);
        CHECK(prof[m] <= prof[bigger]);
        CHECK(prof[bigger] <= prof[m] + 1);
      }
  }
}
