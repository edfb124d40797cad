#include "latcoh/property_suites.hpp"

#include <set>

#include "latcoh/chain.hpp"
#include "latcoh/complex.hpp"
#include "latcoh/error.hpp"
#include "latcoh/region.hpp"
#include "latcoh/spinc.hpp"
#include "latcoh/triangle.hpp"

namespace latcoh {

namespace {

Int uniform(std::mt19937_64& rng, Int lo, Int hi) {
  return lo + static_cast<Int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool chance(std::mt19937_64& rng, double p) { return static_cast<double>(rng() % 1'000'000) < p * 1'000'000.0; }

Coords random_characteristic(std::mt19937_64& rng, const Lattice& lattice, Int spread) {
  Coords k = lattice.parity_vector();
  for (auto& c : k) c += 2 * uniform(rng, -spread, spread);
  return k;
}

std::string label(const PlumbingGraph& g) { return graph_hash(g); }

void record(SuiteResult& r, const std::string& what) {
  r.passed = false;
  if (!r.counterexample) r.counterexample = what;
}

}  // namespace

std::vector<NamedGraph> bundled_corpus() {
  auto chain = [](std::initializer_list<Int> weights) {
    PlumbingGraph g;
    const char* names[] = {"a", "b", "c", "d"};
    int i = 0;
    for (Int w : weights) {
      g.add_vertex(names[i], w);
      if (i > 0) g.add_edge(i - 1, i, +1);
      ++i;
    }
    return g;
  };
  auto star = [](Int centre, std::initializer_list<Int> leaves) {
    PlumbingGraph g;
    g.add_vertex("o", centre);
    int i = 0;
    for (Int w : leaves) {
      g.add_vertex(std::string(1, static_cast<char>('a' + i)), w);
      g.add_edge(0, ++i, +1);
    }
    return g;
  };
  PlumbingGraph e8;
  for (int i = 1; i <= 8; ++i) e8.add_vertex("e" + std::to_string(i), -2);
  for (int i = 0; i + 1 < 7; ++i) e8.add_edge(i, i + 1, +1);
  e8.add_edge(4, 7, +1);
  return {{"s3", chain({-1})},
          {"rp3", chain({-2})},
          {"chain22", chain({-2, -2})},
          {"star3", star(-3, {-2, -2})},
          {"e8", e8},
          {"sigma237", star(-1, {-2, -3, -7})}};
}

PlumbingGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& options) {
  PlumbingGraph g;
  const int n = static_cast<int>(uniform(rng, options.min_vertices, options.max_vertices));
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i), uniform(rng, options.min_weight, options.max_weight));
  for (int i = 1; i < n; ++i) {
    if (!chance(rng, 0.8)) continue;
    g.add_edge(static_cast<int>(uniform(rng, 0, i - 1)), i, chance(rng, 0.7) ? +1 : -1);
  }
  if (n >= 2 && chance(rng, options.extra_edge_probability)) {
    const int a = static_cast<int>(uniform(rng, 0, n - 1));
    int b = static_cast<int>(uniform(rng, 0, n - 2));
    if (b >= a) ++b;
    g.add_edge(a, b, chance(rng, 0.5) ? +1 : -1);
  }
  return g;
}

std::vector<PlumbingGraph> random_graphs(std::uint64_t seed, int count, const RandomGraphOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<PlumbingGraph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_graph(rng, options));
  return out;
}

SuiteResult suite_delta_squared(const std::vector<PlumbingGraph>& graphs, std::uint64_t seed, Int max_mcap) {
  SuiteResult result;
  result.name = "delta-squared";
  std::mt19937_64 rng(seed);
  for (const auto& g : graphs) {
    ++result.graphs;
    const Lattice lattice(g);
    const int n = lattice.rank();
    std::vector<Coords> bases;
    if (determinant(g) != 0) {
      for (const auto& c : spinc_representatives(lattice)) bases.push_back(c.base.coords);
    } else {
      bases.push_back(lattice.parity_vector());
    }
    const Int mcap = uniform(rng, 0, max_mcap);
    const Int half = n <= 2 ? 3 : (n == 3 ? 2 : 1);
    for (const auto& base : bases) {
      const Region region = explicit_region(base, Coords(n, -half), Coords(n, half), mcap);
      const DeltaSquaredReport rep = delta_squared_check(lattice, region);
      result.checked += rep.checked;
      if (!rep.ok) {
        std::string where = rep.counterexample ? describe(*rep.counterexample) : "a coface lighter than its face";
        record(result, "graph " + label(g) + ": delta^2 != 0 or non-monotone weight at " + where);
      }
    }
  }
  return result;
}

SuiteResult suite_c_formula(const std::vector<PlumbingGraph>& graphs, std::uint64_t seed, int samples_per_vertex) {
  SuiteResult result;
  result.name = "c-formula";
  std::mt19937_64 rng(seed);
  for (const auto& g : graphs) {
    if (g.size() > 4) continue;
    ++result.graphs;
    std::set<Int> r_values;
    const int n = g.size();
    for (int v = 0; v < n; ++v) {
      const TriangleContext ctx = TriangleContext::make(g, v);
      for (int sample = 0; sample < samples_per_vertex; ++sample) {
        const Coords k0 = random_characteristic(rng, ctx.lattice, 4);
        for (Int j = -3; j <= 3; ++j) {
          Coords k = k0;
          k[v] += 2 * j;
          for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
            const bool v_in_s = contains(s, v);
            const Int r = v_in_s ? r_value(ctx, k, s) : 0;
            if (v_in_s) r_values.insert(r);
            for (Int i = -8; i <= 8; ++i) {
              ++result.checked;
              const Int c_def = c_exponent_def(ctx, i, k, s);
              const Int c_closed = c_exponent_closed(ctx, i, k, s);
              const Term at{k, s, i};
              if (c_def != c_closed)
                record(result, "graph " + label(g) + " v=" + std::to_string(v) + ": c_def=" + std::to_string(c_def) +
                                   " c_closed=" + std::to_string(c_closed) + " at " + describe(at) + " (m is i)");
              if (c_def < 0) record(result, "negative exponent at " + describe(at));
              const bool zero = c_def == 0;
              const bool expect_zero = v_in_s ? ((i == 0 && r >= 0) || i == -1 || (i == -2 && r <= 0)) : (i == 0 || i == -1);
              if (zero != expect_zero) record(result, "vanishing pattern broken at " + describe(at));
            }
          }
          // q'((K,t+2i+1) + 2E_T) - q'(K,t+2i+1) = q((K,t) + 2E_T) - q(K,t) - (i+1)[v in T]
          for (Int i = -4; i <= 4; ++i) {
            Coords kp = k;
            kp[v] += 2 * i + 1;
            for (VertexSet t = 0; t < (VertexSet{1} << n); ++t) {
              Coords e(n, 0);
              for (int w = 0; w < n; ++w) e[w] = contains(t, w) ? 1 : 0;
              const Int lhs = ctx.lattice_plus.relative_weight(kp, e);
              const Int rhs = ctx.lattice.relative_weight(k, e) - (contains(t, v) ? i + 1 : 0);
              ++result.checked;
              if (lhs != rhs) record(result, "corner relation fails at " + describe({k, t, i}));
            }
          }
        }
      }
    }
    if (r_values.size() < 3) record(result, "graph " + label(g) + ": fewer than three distinct r values sampled");
  }
  return result;
}

SuiteResult suite_chain_maps(const std::vector<PlumbingGraph>& graphs, std::uint64_t seed, int samples_per_vertex,
                             Int max_mcap) {
  SuiteResult result;
  result.name = "chain-maps";
  std::mt19937_64 rng(seed);
  for (const auto& g : graphs) {
    ++result.graphs;
    const int n = g.size();
    for (int v = 0; v < n; ++v) {
      const TriangleContext ctx = TriangleContext::make(g, v);
      for (int sample = 0; sample < samples_per_vertex; ++sample) {
        const VertexSet s = static_cast<VertexSet>(uniform(rng, 0, (Int{1} << n) - 1));
        const Int m = uniform(rng, 0, max_mcap);
        const ChainElement plus(std::vector<Term>{{random_characteristic(rng, ctx.lattice_plus, 5), s, m}});
        ++result.checked;
        if (delta(ctx.lattice, map_A(ctx, plus)) != map_A(ctx, delta(ctx.lattice_plus, plus)))
          record(result, "graph " + label(g) + " v=" + std::to_string(v) + ": delta A != A delta at " +
                             describe(*plus.terms().begin()));
        if (map_A(ctx, plus.times_u()) != map_A(ctx, plus).times_u())
          record(result, "A is not U-equivariant at " + describe(*plus.terms().begin()));
        const ChainElement mid(std::vector<Term>{{random_characteristic(rng, ctx.lattice, 5), s, m}});
        ++result.checked;
        if (delta(ctx.lattice_minus, map_B(ctx, mid)) != map_B(ctx, delta(ctx.lattice, mid)))
          record(result, "graph " + label(g) + " v=" + std::to_string(v) + ": delta B != B delta at " +
                             describe(*mid.terms().begin()));
        if (map_B(ctx, mid.times_u()) != map_B(ctx, mid).times_u())
          record(result, "B is not U-equivariant at " + describe(*mid.terms().begin()));
      }
    }
  }
  return result;
}

SuiteResult suite_ses(const std::vector<PlumbingGraph>& graphs, std::uint64_t seed, Int mcap) {
  SuiteResult result;
  result.name = "short-exact-sequence";
  for (const auto& g : graphs) {
    ++result.graphs;
    for (int v = 0; v < g.size(); ++v) {
      SesOptions options;
      options.mcap = mcap;
      options.seed = seed + static_cast<std::uint64_t>(v);
      options.random_k = 1;
      const SesReport report = verify_ses(TriangleContext::make(g, v), options);
      result.checked += report.dim_domain;
      if (!report.passed())
        record(result, "graph " + label(g) + " v=" + g.id(v) + ": " + report.counterexample.value_or("check failed"));
    }
  }
  return result;
}

}  // namespace latcoh
