#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "gt42/errors.hpp"

namespace gt42 {

// The six 2-element subsets of {1,2,3,4} in lexicographic order:
//   12, 13, 14, 23, 24, 34.
// This ordering indexes minors of a 4x2 frame, homogeneous coordinates of
// CP^5, and vertices of the hypersimplex throughout the library.
inline constexpr int kNumPairs = 6;

struct IndexPair {
  int a = 1, b = 2;  // 1-based, a < b

  constexpr bool operator==(const IndexPair&) const = default;
  constexpr bool contains(int i) const { return a == i || b == i; }
};

inline constexpr std::array<IndexPair, kNumPairs> kPairs{
    IndexPair{1, 2}, IndexPair{1, 3}, IndexPair{1, 4},
    IndexPair{2, 3}, IndexPair{2, 4}, IndexPair{3, 4}};

// Position of {a,b} in kPairs.
constexpr int pair_index(int a, int b) {
  if (a > b) { const int t = a; a = b; b = t; }
  for (int k = 0; k < kNumPairs; ++k)
    if (kPairs[k].a == a && kPairs[k].b == b) return k;
  return -1;
}

constexpr int pair_index(IndexPair p) { return pair_index(p.a, p.b); }

// Complementary pair: {1,2} <-> {3,4}, {1,3} <-> {2,4}, {1,4} <-> {2,3}.
// These index antipodal vertex pairs of the hypersimplex octahedron.
constexpr int complement_index(int k) { return kNumPairs - 1 - k; }

constexpr IndexPair complement(IndexPair p) {
  return kPairs[complement_index(pair_index(p))];
}

inline std::string pair_name(int k) {
  const IndexPair p = kPairs[k];
  return std::to_string(p.a) + std::to_string(p.b);
}

// Parses "12", "34", ... ; throws InputError otherwise.
inline int parse_pair(const std::string& s) {
  if (s.size() == 2 && s[0] >= '1' && s[0] <= '4' && s[1] >= '1' && s[1] <= '4') {
    const int k = pair_index(s[0] - '0', s[1] - '0');
    if (k >= 0) return k;
  }
  throw InputError("not an index pair: '" + s + "'");
}

// Vertex of the hypersimplex for pair k: the 0/1 vector with ones at the
// pair's positions, e.g. delta_13 = (1,0,1,0).
constexpr std::array<int, 4> delta(int k) {
  std::array<int, 4> v{0, 0, 0, 0};
  v[kPairs[k].a - 1] = 1;
  v[kPairs[k].b - 1] = 1;
  return v;
}

}  // namespace gt42
