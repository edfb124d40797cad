#include <random>

#include "doctest.h"
#include "latcoh/chain.hpp"
#include "latcoh/complex.hpp"
#include "latcoh/error.hpp"
#include "latcoh/faults.hpp"
#include "latcoh/graph.hpp"
#include "latcoh/homology.hpp"
#include "latcoh/lattice.hpp"
#include "latcoh/property_suites.hpp"
#include "latcoh/region.hpp"
#include "latcoh/spinc.hpp"
#include "oracles.hpp"

using namespace latcoh;

namespace {

PlumbingGraph single(Int w) {
  PlumbingGraph g;
  g.add_vertex("a", w);
  return g;
}

PlumbingGraph named(const std::string& name) {
  for (auto& n : bundled_corpus())
    if (n.name == name) return n.graph;
  throw std::runtime_error("no corpus graph " + name);
}

oracle::Mat dense(const Lattice& l) {
  oracle::Mat m(l.rank(), oracle::Vec(l.rank()));
  for (int i = 0; i < l.rank(); ++i)
    for (int j = 0; j < l.rank(); ++j) m[i][j] = l.entry(i, j);
  return m;
}

Coords random_coords(std::mt19937_64& rng, int n, Int half) {
  Coords x(n);
  for (auto& v : x) v = static_cast<Int>(rng() % (2 * half + 1)) - half;
  return x;
}

ChainElement to_chain(const Lattice& l, const Coords& base, const std::set<oracle::Elem>& v) {
  ChainElement out;
  for (const auto& e : v) out.toggle({l.translate(base, e.x), e.s, e.m});
  return out;
}

}  // namespace

TEST_CASE("relative weight examples") {
  const Lattice l(single(-2));
  CHECK(l.relative_weight({0}, {1}) == 1);
  CHECK(l.relative_weight({0}, {2}) == 4);
  CHECK(l.relative_weight({0}, {-1}) == 1);
  CHECK(l.relative_weight({2}, {0}) == 0);
  CHECK(l.relative_weight({2}, {1}) == 0);
  CHECK(l.relative_weight({2}, {2}) == 2);
  CHECK(l.relative_weight({2}, {-1}) == 2);
  const Lattice e8(named("e8"));
  CHECK(e8.relative_weight(Coords(8, 0), Coords(8, 0)) == 0);
  CHECK_THROWS_AS(l.relative_weight({1}, {1}), std::logic_error);
}

TEST_CASE("absolute q examples") {
  const Lattice l(single(-2));
  CHECK(absolute_q(l, {0}) == Rational(0));
  CHECK(absolute_q(l, {2}) == Rational(1, 4));
  CHECK_THROWS_AS(absolute_q(Lattice(single(0)), {0}), DegenerateFormError);
}

TEST_CASE("cube weight examples") {
  const Lattice l(single(-2));
  CHECK(cube_weight(l, {0}, {0}, 1) == 1);
  CHECK(cube_weight(l, {0}, {0}, 0) == 0);
  CHECK(cube_weight(l, {0}, {3}, 0) == 9);
  CHECK(cube_weight(l, {2}, {0}, 1) == 0);
}

TEST_CASE("cube boundary") {
  const Lattice l(single(-2));
  const auto faces = cube_boundary(l, {{0}, 1});
  REQUIRE(faces.size() == 2);
  CHECK(std::count(faces.begin(), faces.end(), Cube{{0}, 0}) == 1);
  CHECK(std::count(faces.begin(), faces.end(), Cube{{-4}, 0}) == 1);
  const Lattice c(named("chain22"));
  CHECK(cube_boundary(c, {{0, 0}, 3}).size() == 4);
}

TEST_CASE("property: boundary of boundary vanishes") {
  std::mt19937_64 rng(3);
  RandomGraphOptions options;
  options.min_vertices = 4;
  for (int trial = 0; trial < 30; ++trial) {
    const Lattice l(random_graph(rng, options));
    const int n = l.rank();
    Coords k = l.parity_vector();
    for (auto& v : k) v += 2 * (static_cast<Int>(rng() % 7) - 3);
    const VertexSet s = static_cast<VertexSet>(rng() % (1u << std::min(n, 4)));
    std::map<Cube, int> count;
    for (const auto& f : cube_boundary(l, {k, s}))
      for (const auto& ff : cube_boundary(l, f)) ++count[ff];
    for (const auto& [cube, c] : count) CHECK(c % 2 == 0);
  }
}

TEST_CASE("delta examples") {
  const Lattice l(single(-2));
  CHECK(delta(l, ChainElement({{{0}, 0, 0}})).empty());
  const auto d = delta(l, ChainElement({{{0}, 0, 1}}));
  CHECK(d == ChainElement({{{0}, 1, 0}, {{4}, 1, 0}}));
  CHECK(delta(l, ChainElement({{{0}, 1, 3}})).empty());
  const Lattice c(named("chain22"));
  CHECK(delta(c, ChainElement({{{0, 0}, 3, 5}})).empty());
}

TEST_CASE("property: delta matches the definition, raises degree, commutes with U") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Lattice l(random_graph(rng));
    const auto m = dense(l);
    const int n = l.rank();
    const Coords base = l.parity_vector();
    for (int rep = 0; rep < 10; ++rep) {
      oracle::Elem e{random_coords(rng, n, 3), static_cast<VertexSet>(rng() % (1u << n)),
                     static_cast<Int>(rng() % 6)};
      const ChainElement input({{l.translate(base, e.x), e.s, e.m}});
      const ChainElement got = delta(l, input);
      CHECK(got == to_chain(l, base, oracle::delta(m, base, e)));
      CHECK(got.homogeneous(cardinality(e.s) + 1));
      CHECK(delta(l, input.times_u()) == got.times_u());
      for (const auto& f : cube_cofaces(l, {l.translate(base, e.x), e.s})) CHECK(f.weight_step >= 0);
    }
  }
}

TEST_CASE("property: absolute q differences agree with relative weights") {
  std::mt19937_64 rng(9);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_graph(rng);
    if (determinant(g) == 0) continue;
    const Lattice l(g);
    const Coords base = l.parity_vector();
    for (int rep = 0; rep < 10; ++rep) {
      const Coords x = random_coords(rng, l.rank(), 4);
      CHECK(absolute_q(l, l.translate(base, x)) - absolute_q(l, base) == Rational(l.relative_weight(base, x)));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("chain element and tower arithmetic") {
  ChainElement e;
  const Term t{{0}, 0, 2};
  e.toggle(t);
  e.toggle(t);
  CHECK(e.empty());
  e.toggle(t);
  e.toggle({{2}, 1, 0});
  CHECK(e.filtration() == 2);
  CHECK(e.times_u() == ChainElement({{{0}, 0, 1}}));
  CHECK_FALSE(e.homogeneous(0));

  auto p = TPlusElement::monomial(3);
  p.toggle(0);
  CHECK(p.times_u() == TPlusElement::monomial(2));
  CHECK(TPlusElement::grading(3) == 6);
  CHECK_THROWS(p.toggle(-1));
}

TEST_CASE("truncation region: single vertex") {
  const Lattice l(single(-2));
  const auto r = truncation_region(l, {0}, 2);
  const auto points = region_points(l, r);
  CHECK(points == std::vector<Coords>{{-2}, {-1}, {0}, {1}, {2}});
  CHECK(r.mcap == 2);
  CHECK_THROWS_AS(truncation_region(Lattice(single(0)), {0}, 2), RegionError);
  CHECK_THROWS_AS(explicit_region({0}, {1}, {0}, 2), RegionError);
  CHECK_THROWS_AS(explicit_region({0}, {0}, {1}, -1), RegionError);
}

TEST_CASE("truncation region: E8 fixture") {
  const Lattice l(named("e8"));
  const auto r = truncation_region(l, Coords(8, 0), 2);
  CHECK(r.xmin == Coords{-7, -12, -17, -21, -26, -18, -10, -14});
  CHECK(r.xmax == Coords{7, 12, 17, 21, 26, 18, 10, 14});
  REQUIRE(r.weight_cap);
  CHECK(*r.weight_cap == 11);
  // The weight-capped ellipsoid really reaches far out: points with weight
  // at most 11 exist with a coordinate of absolute value 25.
  bool found = false;
  for (const auto& p : region_points(l, r, Int{11}))
    if (std::abs(p[4]) == 25) found = true;
  CHECK(found);
}

TEST_CASE("basis counting on an explicit box") {
  const Lattice l(single(-2));
  for (Int m : {0, 2}) {
    const auto c = build_complex(l, explicit_region({0}, {-2}, {2}, m));
    CHECK(c.basis[0].size() == static_cast<std::size_t>(5 * (m + 1)));
    CHECK(c.basis[1].size() == static_cast<std::size_t>(4 * (m + 1)));
  }
}

TEST_CASE("property: complex matrices agree with the definition") {
  std::mt19937_64 rng(13);
  RandomGraphOptions options;
  options.max_vertices = 3;
  for (int trial = 0; trial < 20; ++trial) {
    const Lattice l(random_graph(rng, options));
    const auto m = dense(l);
    const int n = l.rank();
    const Coords base = l.parity_vector();
    const auto region = explicit_region(base, Coords(n, -2), Coords(n, 2), 3);
    const auto c = build_complex(l, region);
    for (int d = 0; d < n; ++d) {
      for (std::size_t j = 0; j < c.basis[d].size(); ++j) {
        const auto& e = c.basis[d][j];
        std::set<oracle::Elem> expected;
        for (const auto& t : oracle::delta(m, base, {c.points[e.point], e.s, e.m}))
          if (c.find_offset(t.x, t.s, t.m)) expected.insert(t);
        std::set<oracle::Elem> got;
        for (auto i : c.delta[d][j]) {
          const auto& f = c.basis[d + 1][i];
          got.insert({c.points[f.point], f.s, f.m});
        }
        CHECK(got == expected);
        if (e.m > 0) CHECK(c.basis[d][c.u[d][j]].m == e.m - 1);
      }
    }
  }
}

TEST_CASE("property: homology dimensions agree with dense elimination") {
  std::mt19937_64 rng(17);
  RandomGraphOptions options;
  options.max_vertices = 3;
  for (int trial = 0; trial < 15; ++trial) {
    const Lattice l(random_graph(rng, options));
    const auto m = dense(l);
    const int n = l.rank();
    const Coords base = l.parity_vector();
    const Int half = n == 3 ? 1 : 2;
    const auto region = explicit_region(base, Coords(n, -half), Coords(n, half), 2);
    const auto c = build_complex(l, region);
    const Homology h(c);
    const auto expected = oracle::box_cohomology(m, base, Coords(n, -half), Coords(n, half), 2);
    for (int d = 0; d <= n; ++d) CHECK(h.total_dim(d) == expected[d]);
  }
}

TEST_CASE("delta squared: examples and random graphs") {
  CHECK(delta_squared_check(Lattice(single(-2)), explicit_region({0}, {-4}, {4}, 5)).ok);
  const auto graphs = random_graphs(99, 10, {3, 3, -5, 1, 0.15});
  const auto r = suite_delta_squared(graphs, 99, 5);
  CHECK(r.passed);
  CHECK(r.checked > 1000);
}

TEST_CASE("delta squared detects a corrupted cube weight") {
  // Needs three vertices: on a square the extra weight cancels around
  // every path, so a 2-vertex graph cannot see it.
  const Lattice l(named("star3"));
  const auto region = explicit_region({1, 0, 0}, {-2, -2, -2}, {2, 2, 2}, 4);
  CHECK(delta_squared_check(l, region).ok);
  const ScopedFault fault(Fault::cube_weight_off_by_one);
  const auto bad = delta_squared_check(l, region);
  CHECK_FALSE(bad.ok);
}

TEST_CASE("region delta separates escaped terms") {
  const Lattice l(single(-2));
  const auto region = explicit_region({0}, {0}, {1}, 3);
  const auto rd = delta(l, ChainElement({{{0}, 0, 1}}), region);
  CHECK(rd.interior == ChainElement({{{0}, 1, 0}}));
  CHECK(rd.escaped == ChainElement({{{4}, 1, 0}}));
  CHECK_THROWS_AS(delta(l, ChainElement({{{8}, 0, 0}}), region), RegionError);
}
