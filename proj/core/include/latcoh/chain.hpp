#pragma once

#include <compare>
#include <set>
#include <vector>

#include "latcoh/lattice.hpp"
#include "latcoh/types.hpp"

namespace latcoh {

struct Region;

/// U^{-m} (K,S)^dual with K in absolute coordinates.
struct Term {
  Coords k;
  VertexSet s = 0;
  Int m = 0;
  auto operator<=>(const Term&) const = default;
};

/// Finite GF(2) combination of dual basis elements. Adding a term twice
/// cancels it.
class ChainElement {
 public:
  ChainElement() = default;
  explicit ChainElement(const std::vector<Term>& terms);

  void toggle(const Term& t);
  void add(const ChainElement& other);

  const std::set<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// U times the element: m = 0 terms die, the rest drop one level.
  ChainElement times_u() const;
  /// Every term has |S| = s.
  bool homogeneous(int s) const;
  /// Largest m among the terms, or -1 when empty.
  Int filtration() const;

  bool operator==(const ChainElement&) const = default;

 private:
  std::set<Term> terms_;
};

/// Element of F[U,U^-1]/U F[U]: a finite set of exponents d >= 0 meaning
/// the sum of U^{-d}.
class TPlusElement {
 public:
  TPlusElement() = default;
  static TPlusElement monomial(Int d);

  void toggle(Int d);
  TPlusElement times_u() const;
  const std::set<Int>& support() const { return support_; }
  bool empty() const { return support_.empty(); }
  static Int grading(Int d) { return 2 * d; }

  bool operator==(const TPlusElement&) const = default;

 private:
  std::set<Int> support_;
};

struct Cube {
  Coords k;
  VertexSet s = 0;
  auto operator<=>(const Cube&) const = default;
};

/// Faces (K, S-w) and (K+2E_w, S-w) for w in S.
std::vector<Cube> cube_boundary(const Lattice& lattice, const Cube& c);

/// -1: cofaces of (K,S) are (K,S+w) and (K-2E_w,S+w).
int coface_shift_sign();

/// Cofaces of (K,S) together with q(coface) - q(K,S).
struct Coface {
  Cube cube;
  Int weight_step;
};
std::vector<Coface> cube_cofaces(const Lattice& lattice, const Cube& c);

/// Dual differential on the whole lattice; exact, never truncated.
ChainElement delta(const Lattice& lattice, const ChainElement& e);

struct RegionDelta {
  ChainElement interior;
  ChainElement escaped;  // image terms whose cube or U-power leaves the region
};
/// Throws RegionError when an input term is outside the region.
RegionDelta delta(const Lattice& lattice, const ChainElement& e, const Region& region);

}  // namespace latcoh
