#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace latcoh {

using Int = std::int64_t;

/// Integer coordinates: evaluations K(E_v) of a characteristic vector, or
/// lattice offsets x with K = base + 2Mx. Indexed by vertex order.
using Coords = std::vector<Int>;

/// Subset of vertices as a bitmask over vertex order.
using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 24;

inline bool contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet with(VertexSet s, int v) { return s | (VertexSet{1} << v); }
inline VertexSet without(VertexSet s, int v) { return s & ~(VertexSet{1} << v); }
inline int cardinality(VertexSet s) { return std::popcount(s); }

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace latcoh
