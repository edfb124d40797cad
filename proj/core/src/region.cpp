#include "latcoh/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "latcoh/error.hpp"

namespace latcoh {

bool Region::in_box(const Coords& x) const {
  for (int j = 0; j < rank(); ++j)
    if (x[j] < xmin[j] || x[j] > xmax[j]) return false;
  return true;
}

std::uint64_t Region::box_size() const {
  std::uint64_t total = 1;
  for (int j = 0; j < rank(); ++j) {
    const auto width = static_cast<std::uint64_t>(xmax[j] - xmin[j] + 1);
    if (total > std::numeric_limits<std::uint64_t>::max() / width) return std::numeric_limits<std::uint64_t>::max();
    total *= width;
  }
  return total;
}

Region explicit_region(Coords base, Coords xmin, Coords xmax, Int mcap) {
  if (xmin.size() != base.size() || xmax.size() != base.size())
    throw RegionError("bounds must have one interval per vertex");
  for (std::size_t j = 0; j < base.size(); ++j)
    if (xmin[j] > xmax[j]) throw RegionError("empty interval for coordinate " + std::to_string(j));
  if (mcap < 0) throw RegionError("mcap must be nonnegative");
  Region r;
  r.base = std::move(base);
  r.xmin = std::move(xmin);
  r.xmax = std::move(xmax);
  r.mcap = mcap;
  return r;
}

namespace {

// Weight change of x -> x + sign e_j given K = base + 2Mx.
Int unit_step(const Lattice& lattice, const Coords& k, int j, int sign) {
  return -(sign * k[j] + lattice.entry(j, j)) / 2;
}

// The sublevel set {x : weight(x) <= F} as an ellipsoid
// (x - c)^T A (x - c) <= 2F + c^T A c with A = -M.
class Ellipsoid {
 public:
  Ellipsoid(const Lattice& lattice, const Coords& base) : n_(lattice.rank()) {
    std::vector<double> a(n_ * n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) a[i * n_ + j] = -static_cast<double>(lattice.entry(i, j));
    // Cholesky A = R^T R with R upper triangular.
    r_.assign(n_ * n_, 0.0);
    for (int i = 0; i < n_; ++i) {
      for (int j = i; j < n_; ++j) {
        double sum = a[i * n_ + j];
        for (int k = 0; k < i; ++k) sum -= r_[k * n_ + i] * r_[k * n_ + j];
        if (i == j) {
          if (sum <= 0) throw RegionError("form is not negative definite");
          r_[i * n_ + i] = std::sqrt(sum);
        } else {
          r_[i * n_ + j] = sum / r_[i * n_ + i];
        }
      }
    }
    std::vector<double> half_b(n_);
    for (int i = 0; i < n_; ++i) half_b[i] = static_cast<double>(base[i]) / 2.0;
    centre_ = solve(half_b);
    centre_norm_ = 0;
    for (int i = 0; i < n_; ++i) centre_norm_ += centre_[i] * half_b[i];
    inverse_diag_.resize(n_);
    std::vector<double> e(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
      e[i] = 1.0;
      inverse_diag_[i] = solve(e)[i];
      e[i] = 0.0;
    }
  }

  double radius2(Int bound) const { return 2.0 * static_cast<double>(bound) + centre_norm_; }

  void box(Int bound, Coords& lo, Coords& hi) const {
    const double r2 = std::max(0.0, radius2(bound));
    lo.resize(n_);
    hi.resize(n_);
    for (int i = 0; i < n_; ++i) {
      const double ext = std::sqrt(r2 * inverse_diag_[i]);
      lo[i] = static_cast<Int>(std::floor(centre_[i] - ext - kEps));
      hi[i] = static_cast<Int>(std::ceil(centre_[i] + ext + kEps));
    }
  }

  // Calls visit(x) for every integer x inside the ellipsoid (with slack)
  // and inside the box [lo, hi].
  template <class F>
  void enumerate(Int bound, const Coords& lo, const Coords& hi, F&& visit) const {
    if (n_ == 0) {
      Coords empty;
      visit(empty);
      return;
    }
    Coords x(n_);
    recurse(n_ - 1, radius2(bound), x, lo, hi, visit);
  }

 private:
  static constexpr double kEps = 1e-7;

  std::vector<double> solve(const std::vector<double>& b) const {
    // R^T y = b, then R z = y.
    std::vector<double> y(n_), z(n_);
    for (int i = 0; i < n_; ++i) {
      double sum = b[i];
      for (int k = 0; k < i; ++k) sum -= r_[k * n_ + i] * y[k];
      y[i] = sum / r_[i * n_ + i];
    }
    for (int i = n_ - 1; i >= 0; --i) {
      double sum = y[i];
      for (int k = i + 1; k < n_; ++k) sum -= r_[i * n_ + k] * z[k];
      z[i] = sum / r_[i * n_ + i];
    }
    return z;
  }

  template <class F>
  void recurse(int i, double rem, Coords& x, const Coords& lo, const Coords& hi, F& visit) const {
    if (rem < -kEps * (1.0 + std::abs(rem))) return;
    rem = std::max(rem, 0.0);
    double s = 0;
    for (int j = i + 1; j < n_; ++j) s += r_[i * n_ + j] * (static_cast<double>(x[j]) - centre_[j]);
    const double root = std::sqrt(rem);
    const double rii = r_[i * n_ + i];
    const double slack = kEps * (1.0 + root);
    Int first = static_cast<Int>(std::ceil(centre_[i] + (-root - s) / rii - slack));
    Int last = static_cast<Int>(std::floor(centre_[i] + (root - s) / rii + slack));
    first = std::max(first, lo[i]);
    last = std::min(last, hi[i]);
    for (Int xi = first; xi <= last; ++xi) {
      x[i] = xi;
      const double t = rii * (static_cast<double>(xi) - centre_[i]) + s;
      if (i == 0)
        visit(x);
      else
        recurse(i - 1, rem - t * t, x, lo, hi, visit);
    }
  }

  int n_;
  std::vector<double> r_;
  std::vector<double> centre_;
  double centre_norm_ = 0;
  std::vector<double> inverse_diag_;
};

}  // namespace

Descent descend(const Lattice& lattice, const Coords& base, std::size_t cap) {
  const int n = lattice.rank();
  Descent d;
  d.x.assign(n, 0);
  Coords k = base;
  bool improved = true;
  while (improved) {
    improved = false;
    for (int j = 0; j < n; ++j) {
      for (int sign : {-1, +1}) {
        while (true) {
          const Int change = unit_step(lattice, k, j, sign);
          if (change >= 0) break;
          d.x[j] += sign;
          d.weight += change;
          lattice.step(k, j, sign);
          improved = true;
          if (++d.steps > cap)
            throw RegionError("minimizer descent did not terminate; the form is not negative definite, pass explicit bounds");
        }
      }
    }
  }
  for (int j = 0; j < n; ++j)
    for (int sign : {-1, +1}) d.max_step = std::max(d.max_step, std::abs(unit_step(lattice, k, j, sign)));
  return d;
}

Region truncation_region(const Lattice& lattice, const Coords& base, Int mcap, int class_index) {
  if (mcap < 0) throw RegionError("mcap must be nonnegative");
  if (!lattice.is_characteristic(base)) throw RegionError("base vector is not characteristic");
  const Descent d = descend(lattice, base);
  if (!is_form_negative_definite(lattice.form()))
    throw RegionError("form is not negative definite; pass explicit bounds");
  Region r;
  r.base = base;
  r.mcap = mcap;
  r.class_index = class_index;
  r.weight_cap = d.weight + mcap + lattice.rank() + d.max_step;
  Ellipsoid(lattice, base).box(*r.weight_cap, r.xmin, r.xmax);
  return r;
}

Region enlarged(const Lattice& lattice, const Region& region, Int by) {
  Region r = region;
  for (int j = 0; j < r.rank(); ++j) {
    r.xmin[j] -= by;
    r.xmax[j] += by;
  }
  if (r.weight_cap) {
    Int diag = 1;
    for (int j = 0; j < r.rank(); ++j) diag = std::max(diag, -lattice.entry(j, j));
    *r.weight_cap += by * diag;
  }
  return r;
}

Region with_weight_cap(const Lattice& lattice, const Region& region, Int cap) {
  Region r = region;
  if (r.weight_cap && *r.weight_cap >= cap) return r;
  r.weight_cap = cap;
  Coords lo, hi;
  Ellipsoid(lattice, r.base).box(cap, lo, hi);
  for (int j = 0; j < r.rank(); ++j) {
    r.xmin[j] = std::min(r.xmin[j], lo[j]);
    r.xmax[j] = std::max(r.xmax[j], hi[j]);
  }
  return r;
}

bool region_contains_point(const Lattice& lattice, const Region& region, const Coords& x) {
  if (!region.in_box(x)) return false;
  return !region.weight_cap || lattice.relative_weight(region.base, x) <= *region.weight_cap;
}

std::vector<Coords> region_points(const Lattice& lattice, const Region& region, std::optional<Int> bound,
                                  std::uint64_t scan_cap) {
  std::optional<Int> cap = region.weight_cap;
  if (bound) cap = cap ? std::min(*cap, *bound) : *bound;
  std::vector<Coords> points;
  const int n = region.rank();
  if (cap && is_form_negative_definite(lattice.form())) {
    Ellipsoid(lattice, region.base).enumerate(*cap, region.xmin, region.xmax, [&](const Coords& x) {
      if (lattice.relative_weight(region.base, x) <= *cap) points.push_back(x);
    });
  } else {
    if (region.box_size() > scan_cap) throw BasisCapError("region box too large to scan");
    Coords x = region.xmin;
    while (true) {
      if (!cap || lattice.relative_weight(region.base, x) <= *cap) points.push_back(x);
      int j = n - 1;
      while (j >= 0 && x[j] == region.xmax[j]) {
        x[j] = region.xmin[j];
        --j;
      }
      if (j < 0) break;
      ++x[j];
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

Int region_min_weight(const Lattice& lattice, const Region& region) {
  std::optional<Int> bound;
  if (region.weight_cap && is_form_negative_definite(lattice.form())) {
    const Descent d = descend(lattice, region.base);
    if (region.in_box(d.x) && d.weight <= *region.weight_cap) bound = d.weight;
  }
  auto points = region_points(lattice, region, bound);
  if (points.empty()) throw RegionError("truncation region contains no lattice points");
  Int best = std::numeric_limits<Int>::max();
  for (const auto& x : points) best = std::min(best, lattice.relative_weight(region.base, x));
  return best;
}

std::optional<Coords> offset_of(const Lattice& lattice, const Coords& base, const Coords& k) {
  const int n = lattice.rank();
  Coords diff(n);
  for (int j = 0; j < n; ++j) {
    diff[j] = k[j] - base[j];
    if (diff[j] % 2 != 0) return std::nullopt;
    diff[j] /= 2;
  }
  auto y = solve_rational(lattice.form(), diff);
  Coords x(n);
  for (int j = 0; j < n; ++j) {
    if (y[j].denominator() != 1) return std::nullopt;
    x[j] = y[j].numerator();
  }
  return x;
}

}  // namespace latcoh
