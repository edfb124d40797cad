#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "latcoh/graph.hpp"

namespace latcoh {

struct RandomGraphOptions {
  int min_vertices = 1;
  int max_vertices = 5;
  Int min_weight = -5;
  Int max_weight = 1;
  double extra_edge_probability = 0.15;  // chance of one edge beyond a forest
};

/// Deterministic for a given generator state (uses only raw engine output).
PlumbingGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& options = {});
std::vector<PlumbingGraph> random_graphs(std::uint64_t seed, int count, const RandomGraphOptions& options = {});

struct NamedGraph {
  std::string name;
  PlumbingGraph graph;
};
/// s3 (-1), rp3 (-2), chain22, star3 (-3 with two -2 leaves), e8 and the
/// (2,3,7) star (-1 with leaves -2, -3, -7). Matches the files under data/.
std::vector<NamedGraph> bundled_corpus();

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t graphs = 0;
  std::optional<std::string> counterexample;
};

/// delta^2 = 0 and weight monotonicity on every interior basis element, for
/// every Spin^c class (the parity class alone when det = 0).
SuiteResult suite_delta_squared(const std::vector<PlumbingGraph>& graphs, std::uint64_t seed, Int max_mcap = 5);

/// c from cube weights equals the closed form for i in [-8,8], every S and
/// sampled (K,t); also c >= 0, the vanishing pattern, and the q'-versus-q
/// corner relation.
SuiteResult suite_c_formula(const std::vector<PlumbingGraph>& graphs, std::uint64_t seed, int samples_per_vertex = 4);

/// delta A = A delta, delta B = B delta and U-equivariance on random generators.
SuiteResult suite_chain_maps(const std::vector<PlumbingGraph>& graphs, std::uint64_t seed, int samples_per_vertex = 40,
                             Int max_mcap = 4);

/// Chain-level short exact sequence (and ker B = D) for every vertex choice.
SuiteResult suite_ses(const std::vector<PlumbingGraph>& graphs, std::uint64_t seed, Int mcap = 3);

}  // namespace latcoh
