#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "latcoh/chain.hpp"
#include "latcoh/gf2.hpp"
#include "latcoh/region.hpp"

namespace latcoh {

struct BasisElement {
  std::uint32_t point;  // index into GradedGF2Complex::points
  VertexSet s;
  Int m;
  Int grading;  // m + q(cube) - min weight; preserved by delta
};

struct BuildOptions {
  /// Keep only elements of grading <= gcap. Gradings are never mixed by
  /// delta, so this selects a direct summand.
  std::optional<Int> gcap;
  std::size_t basis_cap = 5'000'000;
};

/// Truncated cochain complex of one Spin^c class over GF(2).
struct GradedGF2Complex {
  Region region;
  std::optional<Int> gcap;
  Int min_weight = 0;  // minimum of q - q(base) over the region

  std::vector<Coords> points;      // offsets, lexicographic
  std::vector<Coords> characters;  // base + 2Mx per point
  std::vector<Int> point_weight;

  /// basis[s]: elements with |S| = s, ordered by point, then S, then m.
  std::vector<std::vector<BasisElement>> basis;
  /// delta[s][j]: indices into basis[s+1].
  std::vector<std::vector<SparseVec>> delta;
  /// u[s][j]: index of U times element j in basis[s], or -1.
  std::vector<std::vector<std::int64_t>> u;
  /// escaped[s][j]: the full differential of element j has a term outside.
  std::vector<std::vector<char>> escaped;

  std::size_t escaped_terms = 0;
  std::size_t nonmonotone = 0;  // cofaces lighter than their face

  int rank() const { return region.rank(); }
  Int top_grading() const;
  std::size_t size() const;

  std::optional<std::uint32_t> point_index(const Coords& x) const;
  /// Index in basis[|S|] of (x_point, S, m).
  std::optional<std::size_t> find(std::uint32_t point, VertexSet s, Int m) const;
  Term term(int degree, std::size_t j) const;
  /// Index of an absolute term K, or empty when it is not a basis element.
  /// `offset` is x with K = base + 2Mx.
  std::optional<std::size_t> find_offset(const Coords& offset, VertexSet s, Int m) const;

  // lookup tables
  std::unordered_map<Coords, std::uint32_t, boost::hash<Coords>> point_lookup;
  struct CubeEntry {
    std::size_t first;  // index of m = 0 in basis[|S|]
    Int count;          // number of m values present
    Int weight;         // q(cube) - q(base)
  };
  std::unordered_map<std::uint64_t, CubeEntry> cubes;
  static std::uint64_t cube_key(std::uint32_t point, VertexSet s) {
    return (static_cast<std::uint64_t>(point) << kMaxVertices) | s;
  }
};

/// Throws BasisCapError when the basis would exceed the cap.
GradedGF2Complex build_complex(const Lattice& lattice, const Region& region, const BuildOptions& options = {});

struct DeltaSquaredReport {
  bool ok = true;
  std::size_t checked = 0;      // interior basis elements tested
  std::size_t nonmonotone = 0;  // faces heavier than a coface
  std::optional<Term> counterexample;
};
/// delta^2 = 0 on every basis element whose images and images of images
/// stay in the region, plus the monotonicity of cube weights.
DeltaSquaredReport delta_squared_check(const Lattice& lattice, const Region& region);
DeltaSquaredReport delta_squared_check(const GradedGF2Complex& c);

}  // namespace latcoh
