#include "latcoh/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "latcoh/error.hpp"
#include "latcoh/faults.hpp"
#include "latcoh/gf2.hpp"
#include "latcoh/spinc.hpp"

namespace latcoh {

TriangleContext TriangleContext::make(const PlumbingGraph& g, int v) {
  if (v < 0 || v >= g.size()) throw UnknownVertexError(std::to_string(v));
  TriangleContext ctx;
  ctx.g = g;
  ctx.v = v;
  ctx.gplus = increment_weight(g, v);
  ctx.gminus = delete_vertex(g, v);
  ctx.lattice = Lattice(ctx.g);
  ctx.lattice_plus = Lattice(ctx.gplus);
  ctx.lattice_minus = Lattice(ctx.gminus);
  return ctx;
}

TriangleContext TriangleContext::make(const PlumbingGraph& g, const std::string& vertex_id) {
  return make(g, g.index_of(vertex_id));
}

Coords TriangleContext::restrict(const Coords& k) const {
  Coords out;
  out.reserve(k.size() - 1);
  for (int j = 0; j < static_cast<int>(k.size()); ++j)
    if (j != v) out.push_back(k[j]);
  return out;
}

Coords TriangleContext::lift(const Coords& kminus, Int t) const {
  Coords out = kminus;
  out.insert(out.begin() + v, t);
  return out;
}

VertexSet TriangleContext::restrict_set(VertexSet s) const {
  const VertexSet low = s & ((VertexSet{1} << v) - 1);
  return low | ((s >> (v + 1)) << v);
}

VertexSet TriangleContext::lift_set(VertexSet s) const {
  const VertexSet low = s & ((VertexSet{1} << v) - 1);
  return low | ((s >> v) << (v + 1));
}

Int r_value(const TriangleContext& ctx, const Coords& k, VertexSet s) {
  if (!contains(s, ctx.v)) throw std::invalid_argument("r is defined only when v lies in S");
  const VertexSet rest = without(s, ctx.v);
  const Lattice& lat = ctx.lattice;
  Coords shifted = k;
  lat.step(shifted, ctx.v, +1);
  const Int offset = -(k[ctx.v] + ctx.mv()) / 2;  // q(K + 2E_v) - q(K)
  return lat.local_cube_weight(k, rest) - (offset + lat.local_cube_weight(shifted, rest));
}

Int c_exponent_def(const TriangleContext& ctx, Int i, const Coords& k, VertexSet s) {
  Coords kp = k;
  kp[ctx.v] += 2 * i + 1;
  return ctx.lattice.local_cube_weight(k, s) - ctx.lattice_plus.local_cube_weight(kp, s) + i * (i + 1) / 2;
}

Int c_exponent_closed(const TriangleContext& ctx, Int i, const Coords& k, VertexSet s) {
  const Int lower = i * (i + 1) / 2;
  const Int upper = (i + 1) * (i + 2) / 2;
  if (!contains(s, ctx.v)) return lower;
  const Int r = r_value(ctx, k, s);
  const Int a = -(i + 1);
  if (r >= std::max<Int>(0, a)) return lower;
  if (r <= std::min<Int>(0, a)) return fault_active(Fault::c_case2_as_case1) ? lower : upper;
  if (r >= 0) return upper + r + (fault_active(Fault::c_case3_off_by_one) ? 1 : 0);
  return fault_active(Fault::c_drop_case4) ? lower : lower - r;
}

namespace {

// Smallest q with q*q >= n.
Int ceil_sqrt(Int n) {
  Int q = static_cast<Int>(std::sqrt(static_cast<double>(n)));
  while (q * q < n) ++q;
  while (q > 0 && (q - 1) * (q - 1) >= n) --q;
  return q;
}

}  // namespace

ChainElement map_A(const TriangleContext& ctx, const ChainElement& e) {
  ChainElement out;
  for (const auto& term : e.terms()) {
    // c >= (|i|-1)(|i|-2)/2, so |i| <= 3 + ceil(sqrt(2m)) covers c <= m.
    const Int reach = 3 + ceil_sqrt(2 * term.m);
    Coords k = term.k;
    const Int t0 = term.k[ctx.v];
    for (Int i = -reach; i <= reach; ++i) {
      k[ctx.v] = t0 - 2 * i - 1;
      const Int c = c_exponent_closed(ctx, i, k, term.s);
      if (c <= term.m) out.toggle({k, term.s, term.m - c});
    }
  }
  return out;
}

ChainElement map_B(const TriangleContext& ctx, const ChainElement& e) {
  ChainElement out;
  for (const auto& term : e.terms()) {
    if (contains(term.s, ctx.v)) continue;
    if (fault_active(Fault::b_parity) && floor_div(term.k[ctx.v] - ctx.mv(), 2) % 2 != 0) continue;
    out.toggle({ctx.restrict(term.k), ctx.restrict_set(term.s), term.m});
  }
  return out;
}

bool is_in_D(const TriangleContext& ctx, const ChainElement& e) {
  std::map<Term, int> counts;
  for (const auto& term : e.terms()) {
    if (contains(term.s, ctx.v)) continue;
    counts[{ctx.restrict(term.k), term.s, term.m}] ^= 1;
  }
  return std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second == 0; });
}

std::string describe(const Term& t) {
  std::ostringstream os;
  os << "K=(";
  for (std::size_t j = 0; j < t.k.size(); ++j) os << (j ? "," : "") << t.k[j];
  os << ") S={";
  bool first = true;
  for (int j = 0; j < kMaxVertices; ++j) {
    if (!contains(t.s, j)) continue;
    os << (first ? "" : ",") << j;
    first = false;
  }
  os << "} m=" << t.m;
  return os.str();
}

namespace {

class TermIndex {
 public:
  std::uint32_t operator()(const Term& t) {
    auto [it, inserted] = index_.emplace(t, static_cast<std::uint32_t>(index_.size()));
    return it->second;
  }
  SparseVec vec(const ChainElement& e) {
    SparseVec v;
    for (const auto& t : e.terms()) v.push_back((*this)(t));
    std::sort(v.begin(), v.end());
    return v;
  }

 private:
  std::map<Term, std::uint32_t> index_;
};

ChainElement single(const Term& t) { return ChainElement(std::vector<Term>{t}); }

std::vector<Coords> k_samples(const TriangleContext& ctx, const SesOptions& options) {
  std::vector<Coords> out;
  const Lattice& lm = ctx.lattice_minus;
  if (lm.rank() == 0) return {Coords{}};
  try {
    const auto classes = spinc_representatives(lm);
    for (std::size_t i = 0; i < classes.size() && i < 3; ++i) out.push_back(classes[i].base.coords);
  } catch (const DegenerateFormError&) {
    out.push_back(lm.parity_vector());
  }
  std::mt19937_64 rng(options.seed);
  const Coords parity = lm.parity_vector();
  for (int r = 0; r < options.random_k; ++r) {
    Coords k(lm.rank());
    for (int j = 0; j < lm.rank(); ++j) k[j] = 2 * (static_cast<Int>(rng() % 13) - 6) + parity[j];
    out.push_back(std::move(k));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void fail(SesReport& report, bool& flag, const std::string& what) {
  flag = false;
  if (!report.counterexample) report.counterexample = what;
}

}  // namespace

SesReport verify_ses(const TriangleContext& ctx, const SesOptions& options) {
  if (options.mcap < 0 || options.interior_half_width < 1) throw RegionError("SES window is empty");
  SesReport report;
  const Int mcap = options.mcap;
  const int hi = options.interior_half_width;
  const int mu = static_cast<int>(2 * ceil_sqrt(2 * mcap) + 4);
  const int h = hi + mu;
  report.mcap = mcap;
  report.interior_half_width = hi;
  report.margin = mu;
  report.k_samples = k_samples(ctx, options);
  const Int centre = -ctx.mv();
  const int n = ctx.rank();

  for (const auto& kminus : report.k_samples) {
    for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
      ++report.blocks;
      const bool v_in_s = contains(s, ctx.v);
      TermIndex gindex;
      TermIndex mindex;

      // A on the G+ generators of the wide window.
      Echelon image_a;
      std::size_t domain = 0;
      for (int j = -h - 1; j <= h; ++j) {
        for (Int m = 0; m <= mcap; ++m) {
          const Term gen{ctx.lift(kminus, centre + 2 * j + 1), s, m};
          const ChainElement img = map_A(ctx, single(gen));
          ++domain;
          image_a.insert(gindex.vec(img));
          if (!map_B(ctx, img).empty()) fail(report, report.ba_zero, "B(A(e)) != 0 for e = " + describe(gen));
        }
      }
      const std::size_t rank_a = image_a.rank();
      report.dim_domain += domain;
      report.dim_im_a += rank_a;
      report.dim_ker_a += domain - rank_a;
      if (rank_a != domain)
        fail(report, report.a_injective, "A has a kernel on the block " + describe({ctx.lift(kminus, centre), s, 0}));

      // B on the interior generators of G.
      std::vector<Term> interior;
      std::vector<SparseVec> b_columns;
      for (int j = -hi; j <= hi; ++j)
        for (Int m = 0; m <= mcap; ++m) {
          interior.push_back({ctx.lift(kminus, centre + 2 * j), s, m});
          b_columns.push_back(mindex.vec(map_B(ctx, single(interior.back()))));
        }
      const std::size_t rank_b = rank(b_columns);
      report.dim_im_b += rank_b;
      if (!v_in_s) {
        const std::size_t targets = static_cast<std::size_t>(mcap + 1);
        report.dim_targets += targets;
        Echelon hit;
        for (const auto& c : b_columns) hit.insert(c);
        for (Int m = 0; m <= mcap; ++m) {
          const Term target{kminus, ctx.restrict_set(s), m};
          if (!hit.contains(mindex.vec(single(target))))
            fail(report, report.b_surjective, "B misses " + describe(target));
        }
      }

      // ker B on the interior, against im A and against the D generators.
      const auto kernel = nullspace(b_columns);
      report.dim_ker_b += kernel.size();
      for (const auto& combo : kernel) {
        ChainElement z;
        for (auto idx : combo) z.toggle(interior[idx]);
        if (!image_a.contains(gindex.vec(z)))
          fail(report, report.kerb_equals_ima, "ker B element outside im A near " + describe(*z.terms().begin()));
        if (!is_in_D(ctx, z))
          fail(report, report.kerb_equals_d, "ker B element not in D near " + describe(*z.terms().begin()));
      }
      std::vector<SparseVec> d_generators;
      for (int j = -hi; j <= hi; ++j) {
        for (Int m = 0; m <= mcap; ++m) {
          const Term first{ctx.lift(kminus, centre + 2 * j), s, m};
          ChainElement gen = single(first);
          if (!v_in_s) {
            if (j == hi) continue;
            gen.toggle({ctx.lift(kminus, centre + 2 * j + 2), s, m});
          }
          if (!map_B(ctx, gen).empty()) fail(report, report.kerb_equals_d, "D generator outside ker B: " + describe(first));
          d_generators.push_back(gindex.vec(gen));
        }
      }
      const std::size_t rank_d = rank(d_generators);
      report.dim_d += rank_d;
      if (rank_d != kernel.size())
        fail(report, report.kerb_equals_d, "dim D != dim ker B on the block " + describe({ctx.lift(kminus, centre), s, 0}));

      // Chain map and U-equivariance identities on interior generators.
      for (int j = -hi - 1; j <= hi; ++j) {
        for (Int m = 0; m <= mcap; ++m) {
          const ChainElement e = single({ctx.lift(kminus, centre + 2 * j + 1), s, m});
          ++report.chain_map_checked;
          if (delta(ctx.lattice, map_A(ctx, e)) != map_A(ctx, delta(ctx.lattice_plus, e)))
            fail(report, report.chain_map_a, "delta A != A delta at " + describe(*e.terms().begin()));
          if (map_A(ctx, e.times_u()) != map_A(ctx, e).times_u())
            fail(report, report.u_equivariant, "A U != U A at " + describe(*e.terms().begin()));
        }
      }
      for (const auto& gen : interior) {
        const ChainElement e = single(gen);
        ++report.chain_map_checked;
        if (delta(ctx.lattice_minus, map_B(ctx, e)) != map_B(ctx, delta(ctx.lattice, e)))
          fail(report, report.chain_map_b, "delta B != B delta at " + describe(gen));
        if (map_B(ctx, e.times_u()) != map_B(ctx, e).times_u())
          fail(report, report.u_equivariant, "B U != U B at " + describe(gen));
      }
    }
  }
  return report;
}

}  // namespace latcoh
