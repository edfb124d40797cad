#include "latcoh/les.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

#include "latcoh/complex.hpp"
#include "latcoh/error.hpp"
#include "latcoh/gf2.hpp"
#include "latcoh/homology.hpp"
#include "latcoh/region.hpp"
#include "latcoh/spinc.hpp"

namespace latcoh {

bool LesReport::exact() const {
  return !failure && std::all_of(levels.begin(), levels.end(), [](const LesLevel& l) { return l.exact(); });
}

namespace {

struct ClassData {
  Coords base;
  std::unique_ptr<GradedGF2Complex> complex;
  std::unique_ptr<Homology> homology;
};

// Filtered cohomology of every Spin^c class of one graph, with one global
// coordinate numbering per degree.
class Side {
 public:
  Side(const Lattice& lattice, Int level, Int gcap) : lattice_(lattice), reducer_(lattice), gcap_(gcap) {
    const int n = lattice.rank();
    for (int c = 0; c < reducer_.class_count(); ++c) {
      ClassData data;
      data.base = reducer_.representative(c);
      Region region = truncation_region(lattice, data.base, level, c);
      const Int wmin = region_min_weight(lattice, region);
      region = with_weight_cap(lattice, region, wmin + gcap);
      BuildOptions options;
      options.gcap = gcap;
      data.complex = std::make_unique<GradedGF2Complex>(build_complex(lattice, region, options));
      if (data.complex->escaped_terms != 0) throw RegionError("filtered complex leaks out of its region");
      data.homology = std::make_unique<Homology>(*data.complex);
      classes_.push_back(std::move(data));
    }
    dims_.assign(n + 1, 0);
    for (int s = 0; s <= n; ++s) {
      for (std::size_t c = 0; c < classes_.size(); ++c) {
        for (Int g = 0; g <= gcap; ++g) {
          const std::size_t d = classes_[c].homology->dim(s, g);
          if (d == 0) continue;
          offsets_[{static_cast<int>(c), s, g}] = dims_[s];
          dims_[s] += d;
        }
      }
    }
  }

  std::size_t dim(int s) const { return s < static_cast<int>(dims_.size()) ? dims_[s] : 0; }

  bool top_vanishes() const {
    for (const auto& data : classes_)
      for (int s = 0; s <= lattice_.rank(); ++s)
        if (data.homology->dim(s, gcap_) != 0 || (gcap_ > 0 && data.homology->dim(s, gcap_ - 1) != 0)) return false;
    return true;
  }

  // Representatives of degree s in global coordinate order.
  std::vector<ChainElement> representatives(int s) const {
    std::vector<ChainElement> out;
    for (const auto& data : classes_) {
      for (Int g = 0; g <= gcap_; ++g) {
        for (const auto& z : data.homology->representatives(s, g)) {
          ChainElement e;
          for (auto j : z) e.toggle(data.complex->term(s, j));
          out.push_back(std::move(e));
        }
      }
    }
    return out;
  }

  SparseVec coordinates(int s, const ChainElement& cocycle, std::size_t& dropped) const {
    std::map<std::pair<int, Int>, SparseVec> pieces;
    for (const auto& t : cocycle.terms()) {
      const auto red = reducer_.reduce(t.k);
      const auto& data = classes_[red.class_index];
      const auto idx = data.complex->find_offset(red.offset, t.s, t.m);
      if (idx) {
        pieces[{red.class_index, data.complex->basis[s][*idx].grading}].push_back(static_cast<std::uint32_t>(*idx));
        continue;
      }
      const Int grading = t.m + cube_weight(lattice_, data.base, red.offset, t.s) - data.complex->min_weight;
      if (grading <= gcap_) throw RegionError("image term missing from a complete grading window: " + describe(t));
      ++dropped;
    }
    SparseVec out;
    for (auto& [key, vec] : pieces) {
      std::sort(vec.begin(), vec.end());
      const auto coords = classes_[key.first].homology->coordinates(s, key.second, vec);
      auto offset = offsets_.find({key.first, s, key.second});
      if (offset == offsets_.end()) {
        if (coords.empty()) continue;
        throw std::logic_error("coordinates in an empty homology block");
      }
      const std::size_t base = offset->second;
      for (auto k : coords) out.push_back(static_cast<std::uint32_t>(base + k));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const Lattice& lattice() const { return lattice_; }

  template <class F>
  void for_each_generator(F&& f) const {
    for (const auto& data : classes_)
      for (int s = 0; s <= lattice_.rank(); ++s)
        for (std::size_t j = 0; j < data.complex->basis[s].size(); ++j) f(data.complex->term(s, j));
  }

 private:
  const Lattice& lattice_;
  ClassReducer reducer_;
  Int gcap_;
  std::vector<ClassData> classes_;
  std::vector<std::size_t> dims_;
  std::map<std::tuple<int, int, Int>, std::size_t> offsets_;
};

LesLevel check_level(const TriangleContext& ctx, Int level, Int gcap) {
  LesLevel out;
  out.level = level;
  out.gcap = gcap;
  const Side plus(ctx.lattice_plus, level, gcap);
  const Side mid(ctx.lattice, level, gcap);
  const Side minus(ctx.lattice_minus, level, gcap);
  out.window_complete = plus.top_vanishes() && mid.top_vanishes() && minus.top_vanishes();

  // A and B must commute with delta on every generator of the filtered
  // pieces, not only on the cocycles chosen as representatives.
  plus.for_each_generator([&](const Term& t) {
    const ChainElement e(std::vector<Term>{t});
    if (out.chain_maps_ok && delta(ctx.lattice, map_A(ctx, e)) != map_A(ctx, delta(ctx.lattice_plus, e)))
      out.chain_maps_ok = false;
  });
  mid.for_each_generator([&](const Term& t) {
    const ChainElement e(std::vector<Term>{t});
    if (out.chain_maps_ok && delta(ctx.lattice_minus, map_B(ctx, e)) != map_B(ctx, delta(ctx.lattice, e)))
      out.chain_maps_ok = false;
  });

  const int n = ctx.rank();
  for (int s = 0; s <= n; ++s) {
    out.dim_plus.push_back(plus.dim(s));
    out.dim_g.push_back(mid.dim(s));
    out.dim_minus.push_back(minus.dim(s));

    std::vector<SparseVec> a_cols;
    for (const auto& z : plus.representatives(s)) {
      const ChainElement img = map_A(ctx, z);
      if (!delta(ctx.lattice_plus, z).empty() || !delta(ctx.lattice, img).empty()) out.chain_maps_ok = false;
      a_cols.push_back(mid.coordinates(s, img, out.dropped_terms));
    }
    std::vector<SparseVec> b_cols;
    for (const auto& z : mid.representatives(s)) {
      const ChainElement img = map_B(ctx, z);
      if (!delta(ctx.lattice, z).empty() || !delta(ctx.lattice_minus, img).empty()) out.chain_maps_ok = false;
      b_cols.push_back(s < ctx.lattice_minus.rank() + 1 ? minus.coordinates(s, img, out.dropped_terms) : SparseVec{});
    }
    for (const auto& col : a_cols)
      if (!latcoh::apply(b_cols, col).empty()) out.ba_zero = false;
    out.rank_a.push_back(rank(a_cols));
    out.rank_b.push_back(rank(b_cols));
    if (out.rank_a[s] + out.rank_b[s] != out.dim_g[s]) out.exact_middle = false;
    out.rank_connecting.push_back(out.dim_minus[s] - out.rank_b[s]);
  }
  for (int s = -1; s <= n; ++s) {
    const std::size_t coker_b = s >= 0 ? out.dim_minus[s] - out.rank_b[s] : 0;
    const std::size_t ker_a = s + 1 <= n ? out.dim_plus[s + 1] - out.rank_a[s + 1] : 0;
    if (coker_b != ker_a) out.exact_connecting = false;
  }
  return out;
}

}  // namespace

LesReport les_check(const TriangleContext& ctx, Int mcap, int tau) {
  for (const Lattice* l : {&ctx.lattice_plus, &ctx.lattice, &ctx.lattice_minus})
    if (!is_form_negative_definite(l->form()))
      throw NotStabilizedError("exact triangle check needs G+, G and G-v all negative definite");
  LesReport report;
  report.mcap = mcap;
  for (Int level = 0; level < mcap; ++level) {
    LesLevel result;
    try {
      for (int attempt = 0; attempt < 3; ++attempt) {
        result = check_level(ctx, level, level + tau + 2 * attempt);
        if (result.window_complete) break;
      }
    } catch (const std::logic_error& e) {
      // An image that is not a cocycle: the maps are not chain maps.
      result.level = level;
      result.chain_maps_ok = false;
      if (!report.failure) report.failure = "filtration level " + std::to_string(level) + ": " + e.what();
    }
    if (!result.exact() && !report.failure) report.failure = "not exact at filtration level " + std::to_string(level);
    report.levels.push_back(std::move(result));
  }
  return report;
}

}  // namespace latcoh
