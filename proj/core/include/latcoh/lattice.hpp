#pragma once

#include <boost/rational.hpp>
#include <vector>

#include "latcoh/graph.hpp"
#include "latcoh/types.hpp"

namespace latcoh {

using Rational = boost::rational<Int>;

/// The character lattice of a plumbing graph together with its weight
/// function. All weights are determinant-free integer differences
///   q(K + 2Mx) - q(K) = -(K(x) + (x,x)) / 2,
/// so the same object serves degenerate and indefinite forms.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(IntersectionForm form);
  explicit Lattice(const PlumbingGraph& g) : Lattice(intersection_form(g)) {}

  int rank() const { return form_.rank(); }
  const IntersectionForm& form() const { return form_; }
  Int entry(int i, int j) const { return form_(i, j); }

  /// coords_v == m(v) (mod 2) for every v.
  bool is_characteristic(const Coords& k) const;
  Coords parity_vector() const;

  Int evaluate(const Coords& k, const Coords& x) const;
  Int norm(const Coords& x) const;

  /// q(K + 2Mx) - q(K).
  Int relative_weight(const Coords& k, const Coords& x) const;

  /// K + 2Mx.
  Coords translate(const Coords& k, const Coords& x) const;
  /// K += 2 * sign * E_j, i.e. adds 2*sign times column j.
  void step(Coords& k, int j, int sign) const;

  /// q(K + 2 E_T) - q(K).
  Int corner_weight(const Coords& k, VertexSet t) const;
  /// q(K, S) - q(K): maximum corner weight over T subset of S.
  Int local_cube_weight(const Coords& k, VertexSet s) const;

 private:
  Int subset_norm(VertexSet t) const;

  IntersectionForm form_;
  std::vector<Int> subset_norms_;  // (E_T, E_T) for every T, when rank is small
};

/// q(base + 2Mx, S) - q(base).
Int cube_weight(const Lattice& lattice, const Coords& base, const Coords& x, VertexSet s);

/// q(K) = -(K, M^{-1} K) / 8 as an exact rational. Throws DegenerateFormError.
Rational absolute_q(const Lattice& lattice, const Coords& k);

/// Exact rational solution of M y = b. Throws DegenerateFormError.
std::vector<Rational> solve_rational(const IntersectionForm& form, const Coords& b);

}  // namespace latcoh
