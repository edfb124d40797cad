#include "latcoh/complex.hpp"

#include <algorithm>

#include "latcoh/error.hpp"

namespace latcoh {

Int GradedGF2Complex::top_grading() const {
  Int top = -1;
  for (const auto& level : basis)
    for (const auto& e : level) top = std::max(top, e.grading);
  return top;
}

std::size_t GradedGF2Complex::size() const {
  std::size_t total = 0;
  for (const auto& level : basis) total += level.size();
  return total;
}

std::optional<std::uint32_t> GradedGF2Complex::point_index(const Coords& x) const {
  auto it = point_lookup.find(x);
  if (it == point_lookup.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> GradedGF2Complex::find(std::uint32_t point, VertexSet s, Int m) const {
  auto it = cubes.find(cube_key(point, s));
  if (it == cubes.end() || m < 0 || m >= it->second.count) return std::nullopt;
  return it->second.first + static_cast<std::size_t>(m);
}

std::optional<std::size_t> GradedGF2Complex::find_offset(const Coords& offset, VertexSet s, Int m) const {
  auto p = point_index(offset);
  if (!p) return std::nullopt;
  return find(*p, s, m);
}

Term GradedGF2Complex::term(int degree, std::size_t j) const {
  const auto& e = basis[degree][j];
  return {characters[e.point], e.s, e.m};
}

GradedGF2Complex build_complex(const Lattice& lattice, const Region& region, const BuildOptions& options) {
  const int n = lattice.rank();
  if (region.rank() != n) throw RegionError("region rank does not match the graph");
  if (n > kMaxVertices) throw Error("too many vertices");
  GradedGF2Complex c;
  c.region = region;
  c.gcap = options.gcap;
  c.min_weight = region_min_weight(lattice, region);

  std::optional<Int> bound;
  if (options.gcap) bound = c.min_weight + *options.gcap;
  c.points = region_points(lattice, region, bound);
  const std::size_t np = c.points.size();
  c.characters.reserve(np);
  c.point_weight.reserve(np);
  for (std::uint32_t p = 0; p < np; ++p) {
    c.point_lookup.emplace(c.points[p], p);
    c.characters.push_back(lattice.translate(region.base, c.points[p]));
    c.point_weight.push_back(lattice.relative_weight(region.base, c.points[p]));
  }

  // up[p * n + j]: index of x_p + e_j
  std::vector<std::int64_t> up(np * n, -1);
  for (std::uint32_t p = 0; p < np; ++p) {
    Coords y = c.points[p];
    for (int j = 0; j < n; ++j) {
      ++y[j];
      if (auto q = c.point_index(y)) up[p * n + j] = *q;
      --y[j];
    }
  }

  c.basis.assign(n + 1, {});
  const VertexSet full = n == 0 ? 0 : static_cast<VertexSet>((std::uint64_t{1} << n) - 1);
  std::vector<std::int64_t> corner(std::size_t{1} << n);
  std::vector<char> present(std::size_t{1} << n);
  std::size_t total = 0;
  for (std::uint32_t p = 0; p < np; ++p) {
    corner[0] = p;
    present[0] = 1;
    for (VertexSet s = 1; s <= full && s != 0; ++s) {
      const int low = std::countr_zero(s);
      const std::int64_t prev = corner[without(s, low)];
      corner[s] = prev < 0 ? -1 : up[prev * n + low];
      bool ok = corner[s] >= 0;
      for (int j = 0; ok && j < n; ++j)
        if (contains(s, j) && !present[without(s, j)]) ok = false;
      present[s] = ok;
    }
    for (VertexSet s = 0;; ++s) {
      if (present[s]) {
        const Int weight = c.point_weight[p] + lattice.local_cube_weight(c.characters[p], s);
        const Int base_grading = weight - c.min_weight;
        Int count = region.mcap + 1;
        if (options.gcap) count = std::min(count, *options.gcap - base_grading + 1);
        count = std::max<Int>(count, 0);
        auto& level = c.basis[cardinality(s)];
        c.cubes.emplace(GradedGF2Complex::cube_key(p, s), GradedGF2Complex::CubeEntry{level.size(), count, weight});
        for (Int m = 0; m < count; ++m) level.push_back({p, s, m, m + base_grading});
        total += static_cast<std::size_t>(count);
        if (total > options.basis_cap)
          throw BasisCapError("basis exceeds the cap of " + std::to_string(options.basis_cap) + " elements");
      }
      if (s == full) break;
    }
  }

  const int sign = coface_shift_sign();
  c.delta.assign(n + 1, {});
  c.u.assign(n + 1, {});
  c.escaped.assign(n + 1, {});
  for (int d = 0; d <= n; ++d) {
    const auto& level = c.basis[d];
    c.delta[d].resize(level.size());
    c.u[d].resize(level.size());
    c.escaped[d].assign(level.size(), 0);
    for (std::size_t j = 0; j < level.size(); ++j) {
      const auto& e = level[j];
      c.u[d][j] = e.m > 0 ? static_cast<std::int64_t>(j) - 1 : -1;
      const Int face_weight = c.cubes.at(GradedGF2Complex::cube_key(e.point, e.s)).weight;
      SparseVec column;
      for (int w = 0; w < n; ++w) {
        if (contains(e.s, w)) continue;
        const VertexSet s2 = with(e.s, w);
        for (int shifted = 0; shifted < 2; ++shifted) {
          Coords x = c.points[e.point];
          if (shifted) x[w] += sign;
          auto q = shifted ? c.point_index(x) : std::optional<std::uint32_t>(e.point);
          const GradedGF2Complex::CubeEntry* entry = nullptr;
          if (q) {
            auto it = c.cubes.find(GradedGF2Complex::cube_key(*q, s2));
            if (it != c.cubes.end()) entry = &it->second;
          }
          const Int coface_weight = entry ? entry->weight : cube_weight(lattice, region.base, x, s2);
          const Int step = coface_weight - face_weight;
          if (step < 0) ++c.nonmonotone;
          if (step > e.m) continue;
          const Int target_m = e.m - step;
          if (entry && target_m < entry->count) {
            column.push_back(static_cast<std::uint32_t>(entry->first + target_m));
          } else {
            ++c.escaped_terms;
            c.escaped[d][j] = 1;
          }
        }
      }
      c.delta[d][j] = normalized(std::move(column));
    }
  }
  return c;
}

DeltaSquaredReport delta_squared_check(const GradedGF2Complex& c) {
  DeltaSquaredReport report;
  report.nonmonotone = c.nonmonotone;
  if (c.nonmonotone > 0) report.ok = false;
  const int n = c.rank();
  for (int d = 0; d + 2 <= n; ++d) {
    for (std::size_t j = 0; j < c.basis[d].size(); ++j) {
      if (c.escaped[d][j]) continue;
      const auto& image = c.delta[d][j];
      bool interior = std::none_of(image.begin(), image.end(), [&](std::uint32_t i) { return c.escaped[d + 1][i] != 0; });
      if (!interior) continue;
      ++report.checked;
      if (!latcoh::apply(c.delta[d + 1], image).empty()) {
        report.ok = false;
        if (!report.counterexample) report.counterexample = c.term(d, j);
      }
    }
  }
  return report;
}

DeltaSquaredReport delta_squared_check(const Lattice& lattice, const Region& region) {
  return delta_squared_check(build_complex(lattice, region));
}

}  // namespace latcoh
