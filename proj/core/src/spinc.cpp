#include "latcoh/spinc.hpp"

#include "latcoh/error.hpp"

namespace latcoh {

ClassReducer::ClassReducer(const Lattice& lattice) : lattice_(&lattice) {
  auto hnf = hermite_normal_form(scaled(lattice.form().matrix(), 2));
  if (!hnf) {
    throw DegenerateFormError(
        "intersection form is degenerate (det = 0): Spin^c classes cannot be enumerated; "
        "supply an explicit base characteristic vector and bounds");
  }
  hermite_ = std::move(hnf->h);
  transform_ = std::move(hnf->transform);
  const int n = lattice.rank();
  radix_.assign(n, 1);
  for (int j = 0; j < n; ++j) radix_[j] = hermite_(j, j) / 2;  // entries of 2M's Hermite form are even
  Int count = 1;
  for (int j = n - 1; j >= 0; --j) count *= radix_[j];
  if (count > (Int{1} << 30)) throw Error("too many Spin^c classes to enumerate");
  class_count_ = static_cast<int>(count);
}

ClassReducer::Reduced ClassReducer::reduce(const Coords& k) const {
  const int n = lattice_->rank();
  if (!lattice_->is_characteristic(k)) throw Error("vector is not characteristic");
  Coords rep = k;
  Coords multiples(n, 0);
  for (int j = 0; j < n; ++j) {
    const Int q = floor_div(rep[j], hermite_(j, j));
    multiples[j] = q;
    if (q != 0)
      for (int i = j; i < n; ++i) rep[i] -= q * hermite_(i, j);
  }
  Int index = 0;
  for (int j = 0; j < n; ++j) index = index * radix_[j] + floor_div(rep[j], 2);
  return {static_cast<int>(index), std::move(rep), transform_.apply(multiples)};
}

std::optional<Coords> ClassReducer::offset_between(const Coords& base, const Coords& k) const {
  auto a = reduce(base);
  auto b = reduce(k);
  if (a.class_index != b.class_index) return std::nullopt;
  Coords x(b.offset.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = b.offset[i] - a.offset[i];
  return x;
}

Coords ClassReducer::representative(int index) const {
  const int n = lattice_->rank();
  const Coords parity = lattice_->parity_vector();
  Coords rep(n);
  Int rest = index;
  for (int j = n - 1; j >= 0; --j) {
    rep[j] = 2 * (rest % radix_[j]) + parity[j];
    rest /= radix_[j];
  }
  return rep;
}

std::vector<SpincClass> spinc_representatives(const Lattice& lattice) {
  ClassReducer reducer(lattice);
  std::vector<SpincClass> classes;
  classes.reserve(reducer.class_count());
  for (int i = 0; i < reducer.class_count(); ++i) {
    classes.push_back({CharVector{reducer.representative(i), i}, i});
  }
  return classes;
}

}  // namespace latcoh
