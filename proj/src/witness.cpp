#include <algorithm>

#include "factorlab/error.hpp"
#include "factorlab/factor.hpp"
#include "factorlab/forbidden.hpp"

namespace factorlab {

namespace {

// Shortest path inside `within` from any source to any target, as a vertex
// list source..target. BFS visits neighbors in increasing order; among the
// targets on the first level that reaches one, the smallest is taken.
std::vector<Vertex> shortest_path(const Graph& g, VertexSet within, VertexSet sources,
                                  VertexSet targets) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  VertexSet seen = sources;
  VertexSet level = sources;
  while (!level.empty()) {
    VertexSet hit = level & targets;
    if (!hit.empty()) {
      std::vector<Vertex> path{hit.first()};
      while (parent[static_cast<std::size_t>(path.back())] != -1) {
        path.push_back(parent[static_cast<std::size_t>(path.back())]);
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    VertexSet next;
    for (Vertex u : level) {
      for (Vertex v : (g.neighbors(u) & within) - seen - next) {
        parent[static_cast<std::size_t>(v)] = u;
        next.insert(v);
      }
    }
    seen |= next;
    level = next;
  }
  return {};
}

Vertex unique_t_neighbor(const Graph& g, const BarrierPair& pair, Vertex x) {
  VertexSet hit = g.neighbors(x) & pair.t;
  if (hit.size() != 1) {
    throw ContractViolation("vertex " + std::to_string(x) + " has " + std::to_string(hit.size()) +
                            " neighbors in T; pair is not a biased barrier");
  }
  return hit.first();
}

void require_structure(const Graph& g, const BarrierPair& pair) {
  auto report = verify_biased_barrier_properties(g, pair);
  for (std::size_t i = 0; i < report.clauses.size(); ++i) {
    if (!report.clauses[i].pass) {
      throw ContractViolation("pair violates biased-barrier property " + std::to_string(i + 1) +
                              " (" + report.clauses[i].witness + ")");
    }
  }
}

ForestWitness finish(const Graph& g, const BarrierPair& pair, std::vector<Vertex> path,
                     VertexSet used_t) {
  ForestWitness w;
  w.path = std::move(path);
  w.singletons = (pair.t - used_t).to_vector();
  Embedding e;
  e.paths.push_back(w.path);
  for (Vertex v : w.singletons) e.paths.push_back({v});
  if (!is_induced_embedding(g, e)) {
    throw InternalError("constructed forest witness is not induced");
  }
  return w;
}

// From x (one T-neighbor y) inside comp: the shortest path to a vertex whose
// T-neighbor is outside `avoid`.
std::vector<Vertex> path_to_other_attachment(const Graph& g, const BarrierPair& pair,
                                             VertexSet comp, Vertex x, VertexSet avoid) {
  VertexSet targets = g.neighbors(pair.t - avoid) & comp;
  auto path = shortest_path(g, comp, VertexSet::single(x), targets);
  if (path.empty()) throw InternalError("no attachment path inside odd component");
  return path;
}

}  // namespace

std::vector<int> ForestWitness::pattern() const {
  std::vector<int> parts{static_cast<int>(path.size())};
  parts.insert(parts.end(), singletons.size(), 1);
  return parts;
}

ForestWitness extract_p4_witness(const Graph& g, const BarrierPair& pair) {
  require_structure(g, pair);
  auto heavy = pair.heavy_odd_components();
  if (heavy.empty()) {
    throw ContractViolation("P4 witness needs an odd component with at least three edges to T");
  }
  VertexSet d = heavy.front();
  VertexSet attached = g.neighbors(pair.t) & d;
  Vertex x1 = attached.first();
  Vertex y1 = unique_t_neighbor(g, pair, x1);
  auto inner = path_to_other_attachment(g, pair, d, x1, VertexSet::single(y1));
  Vertex y2 = unique_t_neighbor(g, pair, inner.back());

  std::vector<Vertex> path{y1};
  path.insert(path.end(), inner.begin(), inner.end());
  path.push_back(y2);
  path.resize(4);
  return finish(g, pair, path, VertexSet{y1, y2});
}

ForestWitness extract_long_path_witness(const Graph& g, const BarrierPair& pair,
                                        std::optional<Vertex> y0_hint) {
  require_structure(g, pair);
  auto heavy = pair.heavy_odd_components();
  Vertex y0 = -1;
  if (y0_hint) {
    if (h_of_vertex(g, pair, *y0_hint) < 2) {
      throw ContractViolation("vertex " + std::to_string(*y0_hint) + " has h(y) < 2");
    }
    y0 = *y0_hint;
  } else {
    for (Vertex y : pair.t) {
      if (h_of_vertex(g, pair, y) >= 2) {
        y0 = y;
        break;
      }
    }
    if (y0 < 0) throw ContractViolation("no vertex of T touches two heavy odd components");
  }

  std::vector<VertexSet> touched;
  for (VertexSet comp : heavy) {
    if (g.neighbors(y0).intersects(comp)) touched.push_back(comp);
  }
  VertexSet d1 = touched[0];
  VertexSet d2 = touched[1];
  Vertex x1 = (g.neighbors(y0) & d1).first();
  Vertex x2 = (g.neighbors(y0) & d2).first();
  auto p1 = path_to_other_attachment(g, pair, d1, x1, VertexSet::single(y0));  // x1..x1*
  auto p2 = path_to_other_attachment(g, pair, d2, x2, VertexSet::single(y0));  // x2..x2*
  Vertex y1 = unique_t_neighbor(g, pair, p1.back());
  Vertex y2 = unique_t_neighbor(g, pair, p2.back());

  std::vector<Vertex> path;
  if (y1 != y2) {
    // y1 x1* P1 x1 y0 x2 P2 x2* y2
    path.push_back(y1);
    path.insert(path.end(), p1.rbegin(), p1.rend());
    path.push_back(y0);
    path.insert(path.end(), p2.begin(), p2.end());
    path.push_back(y2);
    return finish(g, pair, path, VertexSet{y0, y1, y2});
  }

  // y1 == y2: leave D2 through a third attachment z, reached from x2 or x2*.
  Vertex x2_star = p2.back();
  VertexSet targets = g.neighbors(pair.t - VertexSet{y0, y1}) & d2;
  auto p2_star = shortest_path(g, d2, VertexSet{x2, x2_star}, targets);
  if (p2_star.empty()) throw InternalError("no third attachment in odd component");
  Vertex y3 = unique_t_neighbor(g, pair, p2_star.back());

  if (p2_star.front() == x2) {
    // y1 x1* P1 x1 y0 x2 P2* z y3
    path.push_back(y1);
    path.insert(path.end(), p1.rbegin(), p1.rend());
    path.push_back(y0);
  } else {
    // y0 x1 P1 x1* y1 x2* P2* z y3
    path.push_back(y0);
    path.insert(path.end(), p1.begin(), p1.end());
    path.push_back(y1);
  }
  path.insert(path.end(), p2_star.begin(), p2_star.end());
  path.push_back(y3);
  return finish(g, pair, path, VertexSet{y0, y1, y3});
}

InducedForestWitness extract_induced_forest_witness(const Graph& g, const BarrierPair& pair) {
  InducedForestWitness out{extract_p4_witness(g, pair), std::nullopt};
  for (Vertex y : pair.t) {
    if (h_of_vertex(g, pair, y) >= 2) {
      out.long_path = extract_long_path_witness(g, pair, y);
      break;
    }
  }
  return out;
}

}  // namespace factorlab
