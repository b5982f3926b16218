#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rw/params.hpp"

namespace rw {

/// The structural role of an edge of a rose window graph.
enum class EdgeKind : unsigned {
  Rim = 1u << 0,      // A_i – A_{i+1}
  Inspoke = 1u << 1,  // A_i – B_i
  Outspoke = 1u << 2, // A_{i+a} – B_i
  Hub = 1u << 3,      // B_i – B_{i+r}
};

/// Human-readable name of a single edge kind ("rim", "inspoke", ...).
std::string edge_kind_name(EdgeKind k);

/// An undirected edge, stored with u < v. `kinds` is a bitmask of EdgeKind
/// values: distinct structural roles that produce the same vertex pair are
/// recorded on one edge rather than duplicated.
struct Edge {
  int u = 0;
  int v = 0;
  unsigned kinds = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A rose window graph on 2n vertices (see RoseWindowParams for the vertex
/// encoding). Simple undirected graph; coincident structural roles merge
/// into one edge with a combined kind mask.
class RWGraph {
 public:
  explicit RWGraph(const RoseWindowParams& params);

  const RoseWindowParams& params() const { return params_; }
  int n() const { return params_.n; }
  int vertex_count() const { return 2 * params_.n; }
  bool degenerate() const { return degenerate_; }

  /// Edges sorted by (u, v).
  const std::vector<Edge>& edges() const { return edges_; }

  /// Sorted neighbour lists.
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

  bool adjacent(int u, int v) const;

  /// Kind bitmask of the edge {u, v}; throws ParameterError if {u, v} is
  /// not an edge.
  unsigned edge_kinds(int u, int v) const;

  int degree(int v) const;

  /// True iff the graph is connected.
  bool connected() const;

  /// Graphviz DOT rendering: vertices labelled A<i>/B<i>, each edge
  /// carrying a `kind` attribute (comma-joined when roles coincide).
  std::string export_dot() const;

  /// JSON rendering {"n":..,"a":..,"r":..,"degenerate":..,"edges":[[u,v,"kind"],..]};
  /// an edge with several roles appears once per role, sorted.
  std::string export_json() const;

 private:
  RoseWindowParams params_;
  bool degenerate_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> adj_matrix_; // (2n)·(2n) flat lookup

  void add_edge(int u, int v, EdgeKind kind);
};

} // namespace rw
