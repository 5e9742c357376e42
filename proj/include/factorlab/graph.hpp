#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "factorlab/vertex_set.hpp"

namespace factorlab {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with one bit-row per vertex.
///
/// Rows are kept symmetric and loop-free by add_edge; once built, a Graph is
/// only read, so instances may be shared freely between threads.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int order() const noexcept { return n_; }
  int size() const noexcept;

  VertexSet vertices() const noexcept { return VertexSet::full(n_); }
  VertexSet neighbors(Vertex v) const noexcept { return adj_[v]; }
  VertexSet closed_neighbors(Vertex v) const noexcept {
    return adj_[v] | VertexSet::single(v);
  }
  int degree(Vertex v) const noexcept { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const noexcept { return adj_[u].contains(v); }

  /// Throws ContractViolation on loops or out-of-range endpoints.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Edges (u,v) with u < v, in row-major order.
  std::vector<Edge> edges() const;

  bool is_complete() const noexcept;

  /// Union of neighborhoods of the members of s.
  VertexSet neighbors(VertexSet s) const noexcept;

  bool operator==(const Graph& o) const noexcept;

private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// Components of g - removed, ordered by minimum vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet removed);

/// Number of components of g - removed (no allocation).
int component_count(const Graph& g, VertexSet removed) noexcept;

/// The component of g[within] containing v.
VertexSet component_of(const Graph& g, VertexSet within, Vertex v) noexcept;

bool is_connected(const Graph& g) noexcept;

/// Edges with one end in a and one in b. Throws ContractViolation if a, b overlap.
int count_edges_between(const Graph& g, VertexSet a, VertexSet b);

bool is_independent(const Graph& g, VertexSet s) noexcept;

/// Edges with both ends in s.
int edges_inside(const Graph& g, VertexSet s) noexcept;

/// Exact maximum independent set size (branch and bound).
int independence_number(const Graph& g);

/// Maximum independent set size of g[within].
int independence_number(const Graph& g, VertexSet within);

/// Induced subgraph, vertices relabelled in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// Parse the "n m" + "u v" lines edge-list text format.
Graph parse_edge_list(const std::string& text);

}  // namespace factorlab
