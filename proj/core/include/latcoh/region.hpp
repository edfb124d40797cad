#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latcoh/lattice.hpp"

namespace latcoh {

/// Finite truncation of one Spin^c class: offsets x inside a box (K = base + 2Mx),
/// optionally further cut to relative weight <= weight_cap, with U-powers
/// m <= mcap.
struct Region {
  Coords base;
  Coords xmin;
  Coords xmax;
  Int mcap = 0;
  std::optional<Int> weight_cap;  // bound on q(base + 2Mx) - q(base)
  int class_index = -1;

  int rank() const { return static_cast<int>(base.size()); }
  bool in_box(const Coords& x) const;
  /// Number of lattice points in the box, saturating at UINT64_MAX.
  std::uint64_t box_size() const;

  bool operator==(const Region&) const = default;
};

/// Throws RegionError on empty intervals or a negative cap.
Region explicit_region(Coords base, Coords xmin, Coords xmax, Int mcap);

struct Descent {
  Coords x;
  Int weight = 0;          // relative to the base
  Int max_step = 0;        // largest |weight change| of a unit step at x
  std::size_t steps = 0;
};
/// Coordinate descent from x = 0: vertices in order, -1 then +1, each
/// direction repeated while the weight strictly drops. Throws RegionError
/// after `cap` accepted steps.
Descent descend(const Lattice& lattice, const Coords& base, std::size_t cap = 1'000'000);

/// Region of every x whose weight exceeds the descent minimum by at most
/// M + |V| + max_step, boxed by the extent of that ellipsoid. Negative
/// definite forms only; otherwise throws RegionError asking for bounds.
Region truncation_region(const Lattice& lattice, const Coords& base, Int mcap, int class_index = -1);

/// Box widened by `by` on every side; the weight cap (when present) grows by
/// `by` times the largest diagonal entry of -M.
Region enlarged(const Lattice& lattice, const Region& region, Int by);

/// Raises the weight cap to at least `cap` and widens the box to cover the
/// corresponding ellipsoid. Negative definite forms only.
Region with_weight_cap(const Lattice& lattice, const Region& region, Int cap);

bool region_contains_point(const Lattice& lattice, const Region& region, const Coords& x);

/// Region points in lexicographic order, with weight <= min(weight_cap, bound).
/// Uses ellipsoid enumeration for negative definite forms and a full box
/// scan otherwise (throws BasisCapError above `scan_cap` box points).
std::vector<Coords> region_points(const Lattice& lattice, const Region& region,
                                  std::optional<Int> bound = std::nullopt,
                                  std::uint64_t scan_cap = 20'000'000);

/// Minimum weight over the region points (relative to the base).
Int region_min_weight(const Lattice& lattice, const Region& region);

/// x with K = base + 2Mx, or empty when K is not in the class of base.
/// Throws DegenerateFormError on singular forms.
std::optional<Coords> offset_of(const Lattice& lattice, const Coords& base, const Coords& k);

}  // namespace latcoh
