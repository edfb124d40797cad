#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace latcoh {

/// GF(2) vector as the sorted list of its nonzero indices.
using SparseVec = std::vector<std::uint32_t>;

/// a += b.
void xor_into(SparseVec& a, const SparseVec& b);
SparseVec normalized(SparseVec v);

/// Row echelon basis keyed by lowest nonzero index. Each stored row carries a
/// tag vector recording which caller-supplied generators it combines.
class Echelon {
 public:
  /// Reduces v against the stored rows. The return value is empty iff v lies
  /// in the span; `tag` accumulates the tags of the rows used.
  SparseVec reduce(SparseVec v, SparseVec* tag = nullptr) const;

  /// Inserts v with the given tag. Returns false, leaving the basis unchanged,
  /// when v is already in the span; `tag` then holds the dependency.
  bool insert(SparseVec v, SparseVec& tag);
  bool insert(SparseVec v);

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::unordered_map<std::uint32_t, std::size_t> pivot_;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> tags_;
};

std::size_t rank(const std::vector<SparseVec>& columns);

/// Basis of {c : sum_j c_j columns[j] = 0}, each as a set of column indices.
std::vector<SparseVec> nullspace(const std::vector<SparseVec>& columns);

/// Product of a column-sparse matrix with a sparse vector.
SparseVec apply(const std::vector<SparseVec>& columns, const SparseVec& v);

}  // namespace latcoh
