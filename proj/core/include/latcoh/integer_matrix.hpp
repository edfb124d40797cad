#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "latcoh/types.hpp"

namespace latcoh {

/// Dense row-major integer matrix. Small (vertex-count sized) only.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Coords column(std::size_t j) const;
  Coords apply(const Coords& x) const;
  IntMatrix leading_block(std::size_t k) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix scaled(const IntMatrix& a, Int factor);

/// Exact determinant by fraction-free (Bareiss) elimination; 1 for a 0x0 matrix.
Int determinant(const IntMatrix& a);

/// Determinants of the k x k leading blocks, k = 1..n.
std::vector<Int> leading_principal_minors(const IntMatrix& a);

/// Lower-triangular column Hermite form H = A * U of a square matrix, with U
/// unimodular, positive diagonal and entries left of the diagonal reduced
/// into [0, H(i,i)). Empty when A is singular.
struct HermiteForm {
  IntMatrix h;
  IntMatrix transform;
};
std::optional<HermiteForm> hermite_normal_form(const IntMatrix& a);

}  // namespace latcoh
