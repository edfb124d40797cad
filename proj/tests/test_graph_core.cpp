#include <random>

#include "doctest.h"
#include "latcoh/error.hpp"
#include "latcoh/graph.hpp"
#include "latcoh/integer_matrix.hpp"
#include "latcoh/lattice.hpp"
#include "latcoh/property_suites.hpp"
#include "latcoh/spinc.hpp"
#include "oracles.hpp"

using namespace latcoh;

namespace {

oracle::Mat dense(const PlumbingGraph& g) {
  const auto form = intersection_form(g);
  oracle::Mat m(form.rank(), oracle::Vec(form.rank()));
  for (int i = 0; i < form.rank(); ++i)
    for (int j = 0; j < form.rank(); ++j) m[i][j] = form(i, j);
  return m;
}

PlumbingGraph chain_abc() {
  return parse_graph("plumbing v1\nvertex a -2\nvertex b -3\nvertex c -2\nedge a b +\nedge b c +\n");
}

PlumbingGraph named(const std::string& name) {
  for (auto& n : bundled_corpus())
    if (n.name == name) return n.graph;
  throw std::runtime_error("no corpus graph " + name);
}

}  // namespace

TEST_CASE("parse: single vertex") {
  auto g = parse_graph("plumbing v1\nvertex a -2\n");
  REQUIRE(g.size() == 1);
  CHECK(g.id(0) == "a");
  CHECK(intersection_form(g).matrix() == IntMatrix(1, 1, -2));
}

TEST_CASE("parse: two vertices and an edge") {
  auto g = parse_graph("plumbing v1\n# comment\nvertex a -2\nvertex b -3  # trailing\nedge a b +\n");
  const auto f = intersection_form(g);
  CHECK(f(0, 0) == -2);
  CHECK(f(0, 1) == 1);
  CHECK(f(1, 0) == 1);
  CHECK(f(1, 1) == -3);
}

TEST_CASE("parse: error paths name the record") {
  try {
    parse_graph("plumbing v1\nvertex a -2\nedge a c +\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("edge") != std::string::npos);
    CHECK(std::string(e.what()).find("'c'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_graph("plumbing v1\nvertex a x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertex a -2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("plumbing v1\nvertex a -2\nvertex a -3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("plumbing v1\nvertex a -2\nedge a a +\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("plumbing v1\nvertex a -2\nvertex b -2\nedge a b *\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("plumbing v1\nvertex a-b -2\n"), ParseError);
}

TEST_CASE("parse: JSON form is interchangeable") {
  auto text = parse_graph("plumbing v1\nvertex a -2\nvertex b -3\nedge a b -\n");
  auto json = parse_graph(R"({"vertices":[{"id":"a","weight":-2},{"id":"b","weight":-3}],
                              "edges":[{"from":"a","to":"b","sign":"-"}]})");
  CHECK(text == json);
  CHECK(graph_hash(text) == graph_hash(json));
  CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":"a","weight":"x"}]})"), ParseError);
}

TEST_CASE("to_text round trip and hash stability") {
  for (const auto& n : bundled_corpus()) {
    CHECK(parse_graph(to_text(n.graph)) == n.graph);
    CHECK(graph_hash(n.graph).size() == 16);
  }
  CHECK(graph_hash(named("s3")) != graph_hash(named("rp3")));
}

TEST_CASE("intersection form examples") {
  auto g = parse_graph("plumbing v1\nvertex a -2\nvertex b -2\nedge a b +\n");
  CHECK(dense(g) == oracle::Mat{{-2, 1}, {1, -2}});
  auto h = parse_graph("plumbing v1\nvertex a 0\nvertex b 0\nedge a b +\nedge a b -\n");
  CHECK(dense(h) == oracle::Mat{{0, 0}, {0, 0}});
  CHECK_FALSE(is_acyclic(h));
}

TEST_CASE("determinant examples") {
  CHECK(determinant(named("rp3")) == -2);
  CHECK(determinant(named("chain22")) == 3);
  const Int e8 = determinant(named("e8"));
  CHECK((e8 == 1 || e8 == -1));
  CHECK(oracle::det(dense(named("e8"))) == e8);
}

TEST_CASE("negative definiteness examples") {
  CHECK(is_negative_definite(named("rp3")));
  CHECK_FALSE(is_negative_definite(parse_graph("plumbing v1\nvertex a 0\n")));
  auto g = parse_graph("plumbing v1\nvertex a -1\nvertex b -1\nedge a b +\n");
  CHECK(determinant(g) == 0);
  CHECK_FALSE(is_negative_definite(g));
  CHECK(is_negative_definite(named("e8")));
  CHECK(is_negative_definite(named("sigma237")));
}

TEST_CASE("bad vertices") {
  CHECK(bad_vertices(named("rp3")).empty());
  auto g = parse_graph("plumbing v1\nvertex a -1\nvertex b -2\nvertex c -2\nedge a b +\nedge a c +\n");
  CHECK(bad_vertices(g) == std::vector<int>{0});
  auto h = parse_graph("plumbing v1\nvertex a -2\nvertex b -2\nvertex c -2\nedge a b +\nedge a c +\n");
  CHECK(bad_vertices(h).empty());
}

TEST_CASE("delete_vertex and increment_weight") {
  CHECK(delete_vertex(named("rp3"), 0).empty());
  auto g = chain_abc();
  auto mid = delete_vertex(g, 1);
  CHECK(mid.ids() == std::vector<std::string>{"a", "c"});
  CHECK(mid.edges().empty());
  auto leaf = delete_vertex(g, 2);
  CHECK(leaf.ids() == std::vector<std::string>{"a", "b"});
  CHECK(leaf.edges().size() == 1);
  CHECK_THROWS_AS(delete_vertex(g, 3), UnknownVertexError);
  CHECK(increment_weight(named("rp3"), 0).weight(0) == -1);
  CHECK(increment_weight(increment_weight(named("rp3"), 0), 0).weight(0) == 0);
}

TEST_CASE("spinc representatives: examples") {
  auto rp3 = spinc_representatives(named("rp3"));
  REQUIRE(rp3.size() == 2);
  CHECK(rp3[0].base.coords == Coords{0});
  CHECK(rp3[1].base.coords == Coords{2});
  CHECK(spinc_representatives(named("s3")).size() == 1);
  CHECK(spinc_representatives(named("chain22")).size() == 3);
  CHECK_THROWS_AS(spinc_representatives(parse_graph("plumbing v1\nvertex a 0\n")), DegenerateFormError);
}

TEST_CASE("property: forms symmetric, class counts, inequivalence, definiteness, deletion") {
  std::mt19937_64 rng(7);
  RandomGraphOptions options;
  options.max_vertices = 4;
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_graph(rng, options);
    const auto m = dense(g);
    const int n = g.size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) REQUIRE(m[i][j] == m[j][i]);

    const Int d = oracle::det(m);
    REQUIRE(determinant(g) == d);

    // Exhaustive sign check over [-3,3]^n.
    bool definite = true;
    oracle::Vec x(n, -3);
    while (true) {
      if (std::any_of(x.begin(), x.end(), [](Int v) { return v != 0; }) && oracle::quad(m, x) >= 0) definite = false;
      int j = 0;
      while (j < n && x[j] == 3) x[j] = -3, ++j;
      if (j == n) break;
      ++x[j];
    }
    CHECK(is_form_negative_definite(intersection_form(g)) == definite);

    if (d != 0 && std::abs(d) <= 40) {
      const auto classes = spinc_representatives(g);
      CHECK(classes.size() == static_cast<std::size_t>(std::abs(d)));
      for (std::size_t a = 0; a < classes.size(); ++a) {
        CHECK(Lattice(g).is_characteristic(classes[a].base.coords));
        for (std::size_t b = a + 1; b < classes.size(); ++b)
          CHECK_FALSE(oracle::same_class(m, classes[a].base.coords, classes[b].base.coords));
      }
    }

    for (int v = 0; v < n; ++v) {
      const auto deleted = dense(delete_vertex(g, v));
      oracle::Mat expected;
      for (int i = 0; i < n; ++i) {
        if (i == v) continue;
        oracle::Vec row;
        for (int j = 0; j < n; ++j)
          if (j != v) row.push_back(m[i][j]);
        expected.push_back(row);
      }
      CHECK(deleted == expected);
    }
  }
}

TEST_CASE("class reducer sends every characteristic vector to its class") {
  for (const char* name : {"rp3", "chain22", "star3"}) {
    const auto g = named(name);
    const Lattice lattice(g);
    const ClassReducer reducer(lattice);
    const auto m = dense(g);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      Coords k(g.size());
      for (int j = 0; j < g.size(); ++j) k[j] = 2 * static_cast<Int>(rng() % 13) - 12 + (g.weight(j) & 1);
      const auto r = reducer.reduce(k);
      CHECK(oracle::same_class(m, k, r.rep));
      CHECK(lattice.translate(r.rep, r.offset) == k);
      CHECK(r.rep == reducer.representative(r.class_index));
    }
  }
}

TEST_CASE("hermite form is a unimodular column transform") {
  const auto g = named("star3");
  const auto a = scaled(intersection_form(g).matrix(), 2);
  const auto h = hermite_normal_form(a);
  REQUIRE(h);
  CHECK(a * h->transform == h->h);
  const Int det_u = determinant(h->transform);
  CHECK((det_u == 1 || det_u == -1));
  for (std::size_t i = 0; i < h->h.rows(); ++i) {
    CHECK(h->h(i, i) > 0);
    for (std::size_t j = i + 1; j < h->h.cols(); ++j) CHECK(h->h(i, j) == 0);
    for (std::size_t j = 0; j < i; ++j) CHECK((h->h(i, j) >= 0 && h->h(i, j) < h->h(i, i)));
  }
}
