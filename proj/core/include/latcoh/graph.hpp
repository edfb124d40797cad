#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latcoh/integer_matrix.hpp"
#include "latcoh/types.hpp"

namespace latcoh {

/// Weighted signed multigraph. Vertex order is fixed at insertion and is the
/// coordinate order of every lattice object built from the graph.
class PlumbingGraph {
 public:
  struct Edge {
    int from;
    int to;
    int sign;  // +1 or -1
    bool operator==(const Edge&) const = default;
  };

  /// Throws Error on duplicate or malformed ids.
  int add_vertex(std::string id, Int weight);
  /// Throws Error on self-loops, out-of-range endpoints or a bad sign.
  void add_edge(int from, int to, int sign);

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::string& id(int v) const { return ids_.at(v); }
  const std::vector<std::string>& ids() const { return ids_; }
  Int weight(int v) const { return weights_.at(v); }
  const std::vector<Int>& weights() const { return weights_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<int> find(std::string_view id) const;
  /// Throws UnknownVertexError.
  int index_of(std::string_view id) const;

  /// Incident edges counted with multiplicity.
  int degree(int v) const;

  bool operator==(const PlumbingGraph&) const = default;

 private:
  std::vector<std::string> ids_;
  std::vector<Int> weights_;
  std::vector<Edge> edges_;
};

bool is_valid_id(std::string_view id);

/// Accepts the `plumbing v1` text format or the equivalent JSON document.
PlumbingGraph parse_graph(std::string_view text);
PlumbingGraph read_graph_file(const std::string& path);

/// Canonical `plumbing v1` rendering; stable input for content hashing.
std::string to_text(const PlumbingGraph& g);
/// FNV-1a 64-bit digest of the canonical text, as 16 hex digits.
std::string graph_hash(const PlumbingGraph& g);
std::string content_hash(std::string_view text);

/// Symmetric integer matrix: m(v) on the diagonal and signed edge counts off it.
class IntersectionForm {
 public:
  IntersectionForm() = default;
  explicit IntersectionForm(IntMatrix m);

  int rank() const { return static_cast<int>(m_.rows()); }
  Int operator()(int i, int j) const { return m_(i, j); }
  const IntMatrix& matrix() const { return m_; }

  bool operator==(const IntersectionForm&) const = default;

 private:
  IntMatrix m_;
};

IntersectionForm intersection_form(const PlumbingGraph& g);
Int determinant(const PlumbingGraph& g);

struct Definiteness {
  bool acyclic = false;
  bool form_negative_definite = false;
  /// Acyclic and negative definite.
  bool negative_definite() const { return acyclic && form_negative_definite; }
};
Definiteness definiteness(const PlumbingGraph& g);
bool is_negative_definite(const PlumbingGraph& g);
bool is_form_negative_definite(const IntersectionForm& form);
/// Forest test on the underlying multigraph; a repeated edge is a cycle.
bool is_acyclic(const PlumbingGraph& g);

/// Vertices with m(v) + d(v) > 0.
std::vector<int> bad_vertices(const PlumbingGraph& g);

/// Throws UnknownVertexError for an out-of-range index.
PlumbingGraph delete_vertex(const PlumbingGraph& g, int v);
PlumbingGraph increment_weight(const PlumbingGraph& g, int v);

}  // namespace latcoh
