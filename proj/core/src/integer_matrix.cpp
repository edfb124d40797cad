#include "latcoh/integer_matrix.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace latcoh {

namespace {

__extension__ typedef __int128 Wide;

Int narrow(Wide v) {
  if (v > static_cast<Wide>(INT64_MAX) || v < static_cast<Wide>(INT64_MIN)) {
    throw std::overflow_error("integer matrix entry exceeds 64 bits");
  }
  return static_cast<Int>(v);
}

// g = p*a + q*b with g >= 0.
Int extended_gcd(Int a, Int b, Int& p, Int& q) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int quot = old_r / r;
    old_r = std::exchange(r, old_r - quot * r);
    old_s = std::exchange(s, old_s - quot * s);
    old_t = std::exchange(t, old_t - quot * t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  p = old_s;
  q = old_t;
  return old_r;
}

// (col_i, col_j) <- (a*col_i + b*col_j, c*col_i + d*col_j)
void combine_columns(IntMatrix& m, std::size_t i, std::size_t j, Int a, Int b, Int c, Int d) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Wide x = m(r, i), y = m(r, j);
    m(r, i) = narrow(a * x + b * y);
    m(r, j) = narrow(c * x + d * y);
  }
}

void negate_column(IntMatrix& m, std::size_t j) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = -m(r, j);
}

void add_column_multiple(IntMatrix& m, std::size_t target, std::size_t source, Int factor) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    m(r, target) = narrow(static_cast<Wide>(m(r, target)) + static_cast<Wide>(factor) * m(r, source));
  }
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Coords IntMatrix::column(std::size_t j) const {
  Coords c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Coords IntMatrix::apply(const Coords& x) const {
  if (x.size() != cols_) throw std::invalid_argument("IntMatrix::apply: size mismatch");
  Coords y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Wide acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<Wide>((*this)(i, j)) * x[j];
    y[i] = narrow(acc);
  }
  return y;
}

IntMatrix IntMatrix::leading_block(std::size_t k) const {
  IntMatrix b(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) b(i, j) = (*this)(i, j);
  return b;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix product: size mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Wide acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += static_cast<Wide>(a(i, k)) * b(k, j);
      c(i, j) = narrow(acc);
    }
  return c;
}

IntMatrix scaled(const IntMatrix& a, Int factor) {
  IntMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = narrow(static_cast<Wide>(a(i, j)) * factor);
  return c;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  std::vector<Wide> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> Wide& { return m[i * n + j]; };
  Wide previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / previous;
      }
    }
    previous = at(k, k);
  }
  return narrow(sign * at(n - 1, n - 1));
}

std::vector<Int> leading_principal_minors(const IntMatrix& a) {
  std::vector<Int> minors;
  for (std::size_t k = 1; k <= a.rows(); ++k) minors.push_back(determinant(a.leading_block(k)));
  return minors;
}

std::optional<HermiteForm> hermite_normal_form(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("hermite_normal_form: matrix not square");
  const std::size_t n = a.rows();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (h(i, j) == 0) continue;
      Int p = 0, q = 0;
      const Int x = h(i, i), y = h(i, j);
      const Int g = extended_gcd(x, y, p, q);
      const Int xg = x / g, yg = y / g;
      combine_columns(h, i, j, p, q, -yg, xg);
      combine_columns(u, i, j, p, q, -yg, xg);
    }
    if (h(i, i) == 0) return std::nullopt;
    if (h(i, i) < 0) {
      negate_column(h, i);
      negate_column(u, i);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Int f = floor_div(h(i, j), h(i, i));
      if (f != 0) {
        add_column_multiple(h, j, i, -f);
        add_column_multiple(u, j, i, -f);
      }
    }
  }
  return HermiteForm{std::move(h), std::move(u)};
}

}  // namespace latcoh
