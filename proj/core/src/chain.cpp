#include "latcoh/chain.hpp"

#include <algorithm>

#include "latcoh/error.hpp"
#include "latcoh/faults.hpp"
#include "latcoh/region.hpp"

namespace latcoh {

ChainElement::ChainElement(const std::vector<Term>& terms) {
  for (const auto& t : terms) toggle(t);
}

void ChainElement::toggle(const Term& t) {
  auto [it, inserted] = terms_.insert(t);
  if (!inserted) terms_.erase(it);
}

void ChainElement::add(const ChainElement& other) {
  for (const auto& t : other.terms_) toggle(t);
}

ChainElement ChainElement::times_u() const {
  ChainElement out;
  for (const auto& t : terms_)
    if (t.m > 0) out.toggle({t.k, t.s, t.m - 1});
  return out;
}

bool ChainElement::homogeneous(int s) const {
  return std::all_of(terms_.begin(), terms_.end(), [s](const Term& t) { return cardinality(t.s) == s; });
}

Int ChainElement::filtration() const {
  Int best = -1;
  for (const auto& t : terms_) best = std::max(best, t.m);
  return best;
}

TPlusElement TPlusElement::monomial(Int d) {
  TPlusElement e;
  e.toggle(d);
  return e;
}

void TPlusElement::toggle(Int d) {
  if (d < 0) throw std::invalid_argument("negative exponent in T+");
  auto [it, inserted] = support_.insert(d);
  if (!inserted) support_.erase(it);
}

TPlusElement TPlusElement::times_u() const {
  TPlusElement out;
  for (Int d : support_)
    if (d > 0) out.support_.insert(d - 1);
  return out;
}

std::vector<Cube> cube_boundary(const Lattice& lattice, const Cube& c) {
  std::vector<Cube> faces;
  for (int w = 0; w < lattice.rank(); ++w) {
    if (!contains(c.s, w)) continue;
    const VertexSet rest = without(c.s, w);
    faces.push_back({c.k, rest});
    Coords shifted = c.k;
    lattice.step(shifted, w, +1);
    faces.push_back({std::move(shifted), rest});
  }
  return faces;
}

int coface_shift_sign() { return fault_active(Fault::coface_wrong_shift) ? +1 : -1; }

std::vector<Coface> cube_cofaces(const Lattice& lattice, const Cube& c) {
  std::vector<Coface> out;
  const int n = lattice.rank();
  const Int face_weight = lattice.local_cube_weight(c.k, c.s);
  const int sign = coface_shift_sign();
  Coords unit(n, 0);
  for (int w = 0; w < n; ++w) {
    if (contains(c.s, w)) continue;
    const VertexSet up = with(c.s, w);
    out.push_back({{c.k, up}, lattice.local_cube_weight(c.k, up) - face_weight});
    Coords shifted = c.k;
    lattice.step(shifted, w, sign);
    unit[w] = sign;
    const Int offset = lattice.relative_weight(c.k, unit);
    unit[w] = 0;
    const Int step = offset + lattice.local_cube_weight(shifted, up) - face_weight;
    out.push_back({{std::move(shifted), up}, step});
  }
  return out;
}

ChainElement delta(const Lattice& lattice, const ChainElement& e) {
  ChainElement out;
  for (const auto& t : e.terms()) {
    for (auto& cf : cube_cofaces(lattice, {t.k, t.s})) {
      if (cf.weight_step <= t.m) out.toggle({std::move(cf.cube.k), cf.cube.s, t.m - cf.weight_step});
    }
  }
  return out;
}

namespace {

bool cube_in_region(const Lattice& lattice, const Region& region, const Coords& k, VertexSet s) {
  auto x = offset_of(lattice, region.base, k);
  if (!x) return false;
  Coords corner = *x;
  for (VertexSet t = s;; t = (t - 1) & s) {
    for (int j = 0; j < lattice.rank(); ++j) corner[j] = (*x)[j] + (contains(t, j) ? 1 : 0);
    if (!region_contains_point(lattice, region, corner)) return false;
    if (t == 0) break;
  }
  return true;
}

}  // namespace

RegionDelta delta(const Lattice& lattice, const ChainElement& e, const Region& region) {
  for (const auto& t : e.terms()) {
    if (t.m < 0 || t.m > region.mcap || !cube_in_region(lattice, region, t.k, t.s))
      throw RegionError("chain term lies outside the truncation region");
  }
  RegionDelta out;
  const ChainElement image = delta(lattice, e);
  for (const auto& t : image.terms()) {
    if (t.m <= region.mcap && cube_in_region(lattice, region, t.k, t.s))
      out.interior.toggle(t);
    else
      out.escaped.toggle(t);
  }
  return out;
}

}  // namespace latcoh
