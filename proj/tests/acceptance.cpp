// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "latcoh/error.hpp"
#include "latcoh/faults.hpp"
#include "latcoh/graph.hpp"
#include "latcoh/homology.hpp"
#include "latcoh/les.hpp"
#include "latcoh/property_suites.hpp"
#include "latcoh/spinc.hpp"
#include "latcoh/triangle.hpp"

using namespace latcoh;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

PlumbingGraph named(const std::string& name) {
  for (auto& n : bundled_corpus())
    if (n.name == name) return n.graph;
  throw std::runtime_error("no corpus graph " + name);
}

std::vector<PlumbingGraph> small_corpus() {
  std::vector<PlumbingGraph> out;
  for (const auto& n : bundled_corpus())
    if (n.graph.size() <= 4) out.push_back(n.graph);
  return out;
}

std::string suite_detail(const SuiteResult& r) {
  std::ostringstream out;
  out << r.checked << " checks on " << r.graphs << " graphs";
  if (r.counterexample) out << "; counterexample " << *r.counterexample;
  return out.str();
}

Outcome delta_squared() {
  const auto r = suite_delta_squared(random_graphs(2024, 50), 2024, 5);
  return {r.passed && r.checked > 0, suite_detail(r)};
}

Outcome c_formula() {
  RandomGraphOptions options;
  options.max_vertices = 4;
  const auto r = suite_c_formula(random_graphs(2025, 20, options), 2025);
  return {r.passed && r.graphs == 20, suite_detail(r)};
}

Outcome chain_maps() {
  auto graphs = small_corpus();
  for (const auto& g : random_graphs(2026, 20, {1, 4, -5, 1, 0.15})) graphs.push_back(g);
  const auto r = suite_chain_maps(graphs, 2026, 200);
  return {r.passed && r.checked >= 10000, suite_detail(r)};
}

Outcome ses() {
  const auto corpus = small_corpus();
  std::vector<PlumbingGraph> everything;
  for (const auto& n : bundled_corpus()) everything.push_back(n.graph);
  Outcome o;
  const auto clean = suite_ses(everything, 1, 3);
  o.passed = clean.passed;
  o.detail = "clean: " + suite_detail(clean);
  for (Fault f : all_faults()) {
    const ScopedFault scoped(f);
    const auto r = suite_ses(corpus, 1, 3);
    o.detail += std::string("; ") + std::string(fault_name(f)) + (r.passed ? " NOT caught" : " caught");
    if (r.passed) o.passed = false;
  }
  return o;
}

Outcome les() {
  const std::vector<std::pair<std::string, std::string>> triples = {
      {"rp3", "a"}, {"chain22", "a"}, {"chain22", "b"}, {"star3", "o"}, {"star3", "a"}, {"star3", "b"}};
  Outcome o;
  std::size_t levels = 0;
  for (const auto& [name, v] : triples) {
    const auto report = les_check(TriangleContext::make(named(name), v), 3);
    levels += report.levels.size();
    if (!report.exact() || report.levels.size() != 3) {
      o.passed = false;
      o.detail += name + "/" + v + " not exact" + (report.failure ? " (" + *report.failure + ")" : "") + "; ";
    }
  }
  o.detail += std::to_string(triples.size()) + " triples, " + std::to_string(levels) + " filtration levels";
  return o;
}

Outcome known_values() {
  Outcome o;
  auto expect = [&](const std::string& name, Int mcap, std::size_t classes) {
    const Lattice l(named(name));
    const auto reps = spinc_representatives(l);
    bool ok = reps.size() == classes;
    for (const auto& c : reps) {
      const auto r = stabilize(l, c.base.coords, c.index, mcap);
      ok = ok && r.stabilized && r.presentation.degrees[0].towers.size() == 1 && r.presentation.degrees[0].torsions.empty();
      for (std::size_t s = 1; s < r.presentation.degrees.size(); ++s) ok = ok && r.presentation.degrees[s].empty();
    }
    o.detail += name + (ok ? " ok" : " WRONG") + "; ";
    o.passed = o.passed && ok;
  };
  expect("s3", 3, 1);
  expect("rp3", 3, 2);
  expect("chain22", 3, 3);
  const auto start = std::chrono::steady_clock::now();
  expect("e8", 2, 1);
  const double e8 = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.detail += "e8 took " + std::to_string(e8) + " s";
  o.passed = o.passed && e8 < 600;
  return o;
}

// map_A on the dual of ((K,t+2i+1),S) with v in S and r((K,t),S) = 0.
Outcome a_display() {
  Outcome o;
  std::size_t instances = 0;
  for (const auto& n : bundled_corpus()) {
    if (n.graph.size() > 4) continue;
    for (int v = 0; v < n.graph.size(); ++v) {
      const auto ctx = TriangleContext::make(n.graph, v);
      const VertexSet full = (VertexSet{1} << n.graph.size()) - 1;
      for (VertexSet s = 1; s <= full; ++s) {
        if (!contains(s, v)) continue;
        for (int shift = -2; shift <= 2; ++shift) {
          Coords k = ctx.lattice.parity_vector();
          for (int j = 0; j < n.graph.size(); ++j) k[j] += 2 * shift * (j + 1);
          k[v] -= 2 * r_value(ctx, k, s);
          auto at = [&](Int dt) {
            Coords c = k;
            c[v] += dt;
            return Term{c, s, 0};
          };
          for (Int i = -4; i <= 4; ++i) {
            ChainElement expected;
            if (i >= 0) {
              expected.toggle(at(2 * i));
              expected.toggle(at(2 * i + 2));
            } else if (i == -1) {
              expected.toggle(at(0));
            } else {
              expected.toggle(at(2 * i + 2));
              expected.toggle(at(2 * i + 4));
            }
            ++instances;
            if (map_A(ctx, ChainElement({at(2 * i + 1)})) != expected) {
              if (o.passed) o.detail = "mismatch at i=" + std::to_string(i) + " " + describe(at(2 * i + 1)) + "; ";
              o.passed = false;
            }
          }
        }
      }
    }
  }
  o.detail += std::to_string(instances) + " instances, i in [-4,4]";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 delta^2 = 0 on 50 random graphs, M <= 5 (target < 60 s)", delta_squared},
      {"2 exponent definition equals closed form on 20 graphs", c_formula},
      {"3 chain-map identities on >= 10^4 generators", chain_maps},
      {"4 short exact sequence on the corpus; every mutation caught", ses},
      {"5 long exact sequence at M = 3 (target < 120 s)", les},
      {"6 known values: S^3, RP^3, (-2,-2) chain, E8", known_values},
      {"7 three-case image formula for A, i in [-4,4]", a_display},
  };
  const double limits[] = {60, 0, 0, 0, 120, 0, 0};
  int failures = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limits[c] > 0 && seconds >= limits[c]) {
      o.passed = false;
      o.detail += "; over the time target";
    }
    if (!o.passed) ++failures;
    std::printf("[%s] criterion %s  (%.1f s)  %s\n", o.passed ? "PASS" : "FAIL", criteria[c].first.c_str(), seconds,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
