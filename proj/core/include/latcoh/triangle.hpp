#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latcoh/chain.hpp"
#include "latcoh/graph.hpp"
#include "latcoh/lattice.hpp"

namespace latcoh {

/// G, G+ = G with m(v)+1, and G- = G - v. Characteristic vectors of G and G+
/// share coordinates, written (K,t) with t the coordinate at v; G- vectors
/// are K alone.
struct TriangleContext {
  PlumbingGraph g;
  PlumbingGraph gplus;
  PlumbingGraph gminus;
  int v = 0;
  Lattice lattice;
  Lattice lattice_plus;
  Lattice lattice_minus;

  /// Throws UnknownVertexError for a bad vertex.
  static TriangleContext make(const PlumbingGraph& g, int v);
  static TriangleContext make(const PlumbingGraph& g, const std::string& vertex_id);

  Int mv() const { return g.weight(v); }
  int rank() const { return g.size(); }

  Coords restrict(const Coords& k) const;
  Coords lift(const Coords& kminus, Int t) const;
  VertexSet restrict_set(VertexSet s) const;  // requires v not in s
  VertexSet lift_set(VertexSet s) const;
};

/// q((K,t),S-v) - q((K,t)+2E_v,S-v). Throws std::invalid_argument when v is not in S.
Int r_value(const TriangleContext& ctx, const Coords& k, VertexSet s);

/// The exponent from cube weights on G and G+.
Int c_exponent_def(const TriangleContext& ctx, Int i, const Coords& k, VertexSet s);
/// The exponent from i and r alone.
Int c_exponent_closed(const TriangleContext& ctx, Int i, const Coords& k, VertexSet s);

/// Dual action of A: U^{-m}((K,t'),S) goes to the sum over i of
/// U^{-(m-c)}((K,t'-2i-1),S) with c = c(i,(K,t'-2i-1),S) <= m. Exact.
ChainElement map_A(const TriangleContext& ctx, const ChainElement& e);
/// U^{-m}((K,t),S) goes to U^{-m}(K,S) when v is not in S, and to 0 otherwise.
ChainElement map_B(const TriangleContext& ctx, const ChainElement& e);

/// Even number of terms over t for each (K, S, m) with v not in S.
bool is_in_D(const TriangleContext& ctx, const ChainElement& e);

struct SesOptions {
  Int mcap = 3;
  int interior_half_width = 6;  // interior t-window, in steps of 2
  int random_k = 2;             // extra random K on the vertices other than v
  std::uint64_t seed = 1;
};

struct SesReport {
  Int mcap = 0;
  int interior_half_width = 0;
  int margin = 0;
  std::vector<Coords> k_samples;
  std::size_t blocks = 0;

  std::size_t dim_domain = 0;
  std::size_t dim_ker_a = 0;
  std::size_t dim_im_a = 0;
  std::size_t dim_ker_b = 0;
  std::size_t dim_im_b = 0;
  std::size_t dim_targets = 0;
  std::size_t dim_d = 0;

  bool a_injective = true;
  bool b_surjective = true;
  bool ba_zero = true;
  bool kerb_equals_ima = true;
  bool kerb_equals_d = true;

  std::size_t chain_map_checked = 0;
  bool chain_map_a = true;
  bool chain_map_b = true;
  bool u_equivariant = true;

  std::optional<std::string> counterexample;

  bool passed() const {
    return a_injective && b_surjective && ba_zero && kerb_equals_ima && kerb_equals_d && chain_map_a &&
           chain_map_b && u_equivariant;
  }
};

SesReport verify_ses(const TriangleContext& ctx, const SesOptions& options = {});

std::string describe(const Term& t);

}  // namespace latcoh
