#pragma once

#include <algorithm>

#include "factorlab/graph.hpp"

namespace factorlab::detail {

/// Sum over y in T of d_{G-S}(y).
inline int degree_sum_outside(const Graph& g, VertexSet s, VertexSet t) noexcept {
  int sum = 0;
  for (Vertex y : t) sum += (g.neighbors(y) - s).size();
  return sum;
}

/// Cheap lower bound on delta(S,T): h(S,T) is at most the number of vertices
/// left over and at most the number of edges from T into them.
inline int delta_lower_bound(const Graph& g, VertexSet s, VertexSet t, int degree_sum) noexcept {
  VertexSet rest = g.vertices() - s - t;
  int to_rest = degree_sum - 2 * edges_inside(g, t);
  int h_max = std::min(rest.size(), to_rest);
  return 2 * s.size() - 2 * t.size() + degree_sum - h_max;
}

/// Exact delta(S,T) without building the classification.
inline int delta_value(const Graph& g, VertexSet s, VertexSet t, int degree_sum) noexcept {
  VertexSet rest = g.vertices() - s - t;
  int odd = 0;
  while (!rest.empty()) {
    VertexSet comp = component_of(g, rest, rest.first());
    rest -= comp;
    int to_t = 0;
    for (Vertex v : comp) to_t += (g.neighbors(v) & t).size();
    odd += to_t & 1;
  }
  return 2 * s.size() - 2 * t.size() + degree_sum - odd;
}

/// delta(S,T) if the pair can be a barrier, else a non-negative placeholder.
inline int delta_if_candidate(const Graph& g, VertexSet s, VertexSet t) noexcept {
  int degree_sum = degree_sum_outside(g, s, t);
  if (delta_lower_bound(g, s, t, degree_sum) >= 0) return 0;
  return delta_value(g, s, t, degree_sum);
}

/// Next subset of `universe` after `sub` in increasing mask order; wraps to 0.
inline VertexSet next_subset(VertexSet sub, VertexSet universe) noexcept {
  return VertexSet(((sub.bits() | ~universe.bits()) + 1) & universe.bits());
}

}  // namespace factorlab::detail
