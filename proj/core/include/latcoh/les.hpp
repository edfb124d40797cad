#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latcoh/triangle.hpp"

namespace latcoh {

/// Exactness data at one filtration level m, where the sequence
/// 0 -> C(G+)^(m) -> C(G)^(m) -> C(G-)^(m) -> 0 is short exact.
struct LesLevel {
  Int level = 0;
  Int gcap = 0;
  // indexed by degree s = 0..|V|
  std::vector<std::size_t> dim_plus, dim_g, dim_minus;
  std::vector<std::size_t> rank_a, rank_b;
  /// Rank of the connecting map H^s(G-) -> H^{s+1}(G+) forced by exactness
  /// at H^s(G-), i.e. dim H^s(G-) - rank B_s.
  std::vector<std::size_t> rank_connecting;
  bool ba_zero = true;
  bool exact_middle = true;       // im A = ker B
  bool exact_connecting = true;   // coker B_s and ker A_{s+1} have equal size
  bool chain_maps_ok = true;      // A and B commute with delta on the filtered pieces
  bool window_complete = true;    // no homology at the grading cap
  std::size_t dropped_terms = 0;  // image terms above the grading window
  bool exact() const { return ba_zero && exact_middle && exact_connecting && chain_maps_ok && window_complete; }
};

struct LesReport {
  Int mcap = 0;
  std::vector<LesLevel> levels;  // m = 0..mcap-1
  std::optional<std::string> failure;
  bool exact() const;
};

/// Induced maps on the cohomology of the filtered pieces m <= mcap-1 of all
/// Spin^c classes of G+, G, G-. Requires all three forms negative definite
/// (throws NotStabilizedError otherwise).
LesReport les_check(const TriangleContext& ctx, Int mcap, int tau = 3);

}  // namespace latcoh
