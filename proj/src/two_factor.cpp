#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "factorlab/factor.hpp"

namespace factorlab {

namespace {

using MatchingGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

// Tutte's reduction for f = 2. Vertex v of degree d becomes d "slot" vertices,
// one per incident edge, plus d - 2 "core" vertices joined to every slot of v.
// Edge uv joins the slot of u for uv with the slot of v for uv. A perfect
// matching leaves exactly two slots of v unmatched to cores, and those two
// slots are matched across their edges: that edge set is a 2-factor.
struct Gadget {
  MatchingGraph graph;
  std::vector<Edge> original;                    // edge index -> (u, v)
  std::vector<std::pair<int, int>> slot_pair;    // edge index -> (slot of u, slot of v)
};

Gadget build_gadget(const Graph& g) {
  Gadget gadget;
  gadget.original = g.edges();
  const int n = g.order();

  std::vector<std::vector<int>> slots(n);
  int next = 0;
  gadget.slot_pair.resize(gadget.original.size());
  for (std::size_t e = 0; e < gadget.original.size(); ++e) {
    auto [u, v] = gadget.original[e];
    int su = next++;
    int sv = next++;
    slots[u].push_back(su);
    slots[v].push_back(sv);
    gadget.slot_pair[e] = {su, sv};
  }
  std::vector<std::pair<int, int>> links;
  for (auto [su, sv] : gadget.slot_pair) links.emplace_back(su, sv);
  for (Vertex v = 0; v < n; ++v) {
    int cores = g.degree(v) - 2;
    for (int c = 0; c < cores; ++c) {
      int core = next++;
      for (int s : slots[v]) links.emplace_back(s, core);
    }
  }
  gadget.graph = MatchingGraph(static_cast<std::size_t>(next));
  for (auto [a, b] : links) boost::add_edge(a, b, gadget.graph);
  return gadget;
}

std::optional<TwoFactor> solve(const Graph& g) {
  const int n = g.order();
  if (n == 0) return TwoFactor{};
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return std::nullopt;
  }
  Gadget gadget = build_gadget(g);
  const auto size = boost::num_vertices(gadget.graph);
  std::vector<boost::graph_traits<MatchingGraph>::vertex_descriptor> mate(size);
  boost::edmonds_maximum_cardinality_matching(gadget.graph, mate.data());
  const auto none = boost::graph_traits<MatchingGraph>::null_vertex();
  for (std::size_t v = 0; v < size; ++v) {
    if (mate[v] == none) return std::nullopt;
  }
  TwoFactor factor;
  for (std::size_t e = 0; e < gadget.original.size(); ++e) {
    auto [su, sv] = gadget.slot_pair[e];
    if (mate[static_cast<std::size_t>(su)] == static_cast<std::size_t>(sv)) {
      factor.edges.push_back(gadget.original[e]);
    }
  }
  return factor;
}

}  // namespace

bool has_two_factor(const Graph& g) { return solve(g).has_value(); }

std::optional<TwoFactor> find_two_factor(const Graph& g) { return solve(g); }

bool is_two_factor(const Graph& g, const TwoFactor& f) {
  std::vector<int> degree(static_cast<std::size_t>(g.order()), 0);
  for (auto [u, v] : f.edges) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v)) return false;
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
  for (int d : degree) {
    if (d != 2) return false;
  }
  // Duplicate edges would let a vertex reach degree 2 with one neighbor.
  std::vector<Edge> sorted = f.edges;
  for (auto& [u, v] : sorted) {
    if (u > v) std::swap(u, v);
  }
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace factorlab
