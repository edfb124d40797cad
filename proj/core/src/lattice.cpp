#include "latcoh/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "latcoh/error.hpp"
#include "latcoh/faults.hpp"

namespace latcoh {

namespace {
constexpr int kSubsetTableLimit = 16;
}

Lattice::Lattice(IntersectionForm form) : form_(std::move(form)) {
  const int n = rank();
  if (n <= kSubsetTableLimit) {
    subset_norms_.assign(std::size_t{1} << n, 0);
    for (VertexSet t = 1; t < (VertexSet{1} << n); ++t) {
      const int low = std::countr_zero(t);
      const VertexSet rest = without(t, low);
      // (E_T, E_T) = (E_rest, E_rest) + 2 (E_low, E_rest) + m(low)
      Int cross = 0;
      for (int j = 0; j < n; ++j)
        if (contains(rest, j)) cross += form_(low, j);
      subset_norms_[t] = subset_norms_[rest] + 2 * cross + form_(low, low);
    }
  }
}

bool Lattice::is_characteristic(const Coords& k) const {
  if (static_cast<int>(k.size()) != rank()) return false;
  for (int v = 0; v < rank(); ++v)
    if (((k[v] - form_(v, v)) % 2) != 0) return false;
  return true;
}

Coords Lattice::parity_vector() const {
  Coords k(rank());
  for (int v = 0; v < rank(); ++v) k[v] = ((form_(v, v) % 2) + 2) % 2;
  return k;
}

Int Lattice::evaluate(const Coords& k, const Coords& x) const {
  Int acc = 0;
  for (int v = 0; v < rank(); ++v) acc += k[v] * x[v];
  return acc;
}

Int Lattice::norm(const Coords& x) const {
  Int acc = 0;
  for (int i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (int j = 0; j < rank(); ++j) row += form_(i, j) * x[j];
    acc += x[i] * row;
  }
  return acc;
}

Int Lattice::relative_weight(const Coords& k, const Coords& x) const {
  const Int total = evaluate(k, x) + norm(x);
  if (total % 2 != 0) throw std::logic_error("relative_weight: K(x) + (x,x) is odd; K is not characteristic");
  return -total / 2;
}

Coords Lattice::translate(const Coords& k, const Coords& x) const {
  Coords out = k;
  for (int j = 0; j < rank(); ++j) {
    if (x[j] == 0) continue;
    for (int i = 0; i < rank(); ++i) out[i] += 2 * x[j] * form_(i, j);
  }
  return out;
}

void Lattice::step(Coords& k, int j, int sign) const {
  for (int i = 0; i < rank(); ++i) k[i] += 2 * sign * form_(i, j);
}

Int Lattice::subset_norm(VertexSet t) const {
  if (!subset_norms_.empty()) return subset_norms_[t];
  Int acc = 0;
  for (int i = 0; i < rank(); ++i) {
    if (!contains(t, i)) continue;
    for (int j = 0; j < rank(); ++j)
      if (contains(t, j)) acc += form_(i, j);
  }
  return acc;
}

Int Lattice::corner_weight(const Coords& k, VertexSet t) const {
  Int acc = subset_norm(t);
  for (int j = 0; j < rank(); ++j)
    if (contains(t, j)) acc += k[j];
  return -acc / 2;
}

Int Lattice::local_cube_weight(const Coords& k, VertexSet s) const {
  Int best = 0;  // T = empty
  for (VertexSet t = s; t != 0; t = (t - 1) & s) best = std::max(best, corner_weight(k, t));
  if (fault_active(Fault::cube_weight_off_by_one) && cardinality(s) == 2) ++best;
  return best;
}

Int cube_weight(const Lattice& lattice, const Coords& base, const Coords& x, VertexSet s) {
  return lattice.relative_weight(base, x) + lattice.local_cube_weight(lattice.translate(base, x), s);
}

std::vector<Rational> solve_rational(const IntersectionForm& form, const Coords& b) {
  const int n = form.rank();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = form(i, j);
    a[i][n] = b[i];
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a[pivot][col].numerator() == 0) ++pivot;
    if (pivot == n) throw DegenerateFormError("intersection form is singular");
    std::swap(a[pivot], a[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].numerator() == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Rational> y(n);
  for (int i = 0; i < n; ++i) y[i] = a[i][n] / a[i][i];
  return y;
}

Rational absolute_q(const Lattice& lattice, const Coords& k) {
  auto y = solve_rational(lattice.form(), k);
  Rational acc = 0;
  for (int i = 0; i < lattice.rank(); ++i) acc += y[i] * k[i];
  return -acc / 8;
}

}  // namespace latcoh
