#include "latcoh/gf2.hpp"

#include <algorithm>

namespace latcoh {

void xor_into(SparseVec& a, const SparseVec& b) {
  if (b.empty()) return;
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  a.swap(out);
}

SparseVec normalized(SparseVec v) {
  std::sort(v.begin(), v.end());
  SparseVec out;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(v[i]);
    i = j;
  }
  return out;
}

SparseVec Echelon::reduce(SparseVec v, SparseVec* tag) const {
  while (!v.empty()) {
    auto it = pivot_.find(v.front());
    if (it == pivot_.end()) break;
    xor_into(v, rows_[it->second]);
    if (tag) xor_into(*tag, tags_[it->second]);
  }
  return v;
}

bool Echelon::insert(SparseVec v, SparseVec& tag) {
  v = reduce(std::move(v), &tag);
  if (v.empty()) return false;
  pivot_.emplace(v.front(), rows_.size());
  rows_.push_back(std::move(v));
  tags_.push_back(tag);
  return true;
}

bool Echelon::insert(SparseVec v) {
  SparseVec tag;
  return insert(std::move(v), tag);
}

std::size_t rank(const std::vector<SparseVec>& columns) {
  Echelon e;
  for (const auto& c : columns) e.insert(c);
  return e.rank();
}

std::vector<SparseVec> nullspace(const std::vector<SparseVec>& columns) {
  Echelon e;
  std::vector<SparseVec> kernel;
  for (std::uint32_t j = 0; j < columns.size(); ++j) {
    SparseVec tag{j};
    if (!e.insert(columns[j], tag)) kernel.push_back(std::move(tag));
  }
  return kernel;
}

SparseVec apply(const std::vector<SparseVec>& columns, const SparseVec& v) {
  SparseVec out;
  for (auto j : v) xor_into(out, columns[j]);
  return out;
}

}  // namespace latcoh
