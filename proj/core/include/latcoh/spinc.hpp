#pragma once

#include <optional>
#include <vector>

#include "latcoh/lattice.hpp"

namespace latcoh {

struct CharVector {
  Coords coords;
  /// Enumerated class ordinal, or -1 for a user-supplied base.
  int class_index = -1;
};

struct SpincClass {
  CharVector base;
  int index = 0;
};

/// Canonical reduction of characteristic vectors modulo 2L, using the Hermite
/// form of 2M. Every characteristic K decomposes uniquely as
/// K = rep + 2Mx with rep in the fundamental box 0 <= rep_j < H_jj.
class ClassReducer {
 public:
  /// Throws DegenerateFormError when det M == 0.
  explicit ClassReducer(const Lattice& lattice);

  struct Reduced {
    int class_index;
    Coords rep;
    Coords offset;  // x with K = rep + 2Mx
  };
  Reduced reduce(const Coords& k) const;

  /// x with K = base + 2Mx, when both lie in one class.
  std::optional<Coords> offset_between(const Coords& base, const Coords& k) const;

  int class_count() const { return class_count_; }
  Coords representative(int index) const;
  const IntMatrix& hermite() const { return hermite_; }

 private:
  const Lattice* lattice_;
  IntMatrix hermite_;
  IntMatrix transform_;
  std::vector<Int> radix_;
  int class_count_ = 1;
};

/// |det| classes in lexicographic order of their canonical coordinates.
/// Throws DegenerateFormError with a hint to pass an explicit base instead.
std::vector<SpincClass> spinc_representatives(const Lattice& lattice);
inline std::vector<SpincClass> spinc_representatives(const PlumbingGraph& g) {
  return spinc_representatives(Lattice(g));
}

}  // namespace latcoh
