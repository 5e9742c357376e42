#include "factorlab/graph.hpp"

#include <algorithm>
#include <sstream>

#include "factorlab/error.hpp"

namespace factorlab {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for (Vertex v : *this) {
    if (!first_member) out += ',';
    out += std::to_string(v);
    first_member = false;
  }
  out += '}';
  return out;
}

bool lex_less(VertexSet a, VertexSet b) noexcept {
  if (a == b) return false;
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end();
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw ContractViolation("graph order " + std::to_string(n) + " outside [0," +
                            std::to_string(kMaxVertices) + "]");
  }
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::size() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += adj_[v].size();
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw ContractViolation("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range for order " + std::to_string(n_));
  }
  if (u == v) throw ContractViolation("loop at vertex " + std::to_string(u));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  adj_[u].erase(v);
  adj_[v].erase(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_complete() const noexcept {
  for (Vertex v = 0; v < n_; ++v) {
    if (adj_[v].size() != n_ - 1) return false;
  }
  return true;
}

VertexSet Graph::neighbors(VertexSet s) const noexcept {
  VertexSet out;
  for (Vertex v : s) out |= adj_[v];
  return out;
}

bool Graph::operator==(const Graph& o) const noexcept {
  if (n_ != o.n_) return false;
  return std::equal(adj_.begin(), adj_.begin() + n_, o.adj_.begin());
}

VertexSet component_of(const Graph& g, VertexSet within, Vertex v) noexcept {
  VertexSet comp = VertexSet::single(v);
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex u : frontier) next |= g.neighbors(u);
    next = (next & within) - comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

std::vector<VertexSet> components(const Graph& g, VertexSet removed) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices() - removed;
  while (!rest.empty()) {
    VertexSet comp = component_of(g, rest, rest.first());
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

int component_count(const Graph& g, VertexSet removed) noexcept {
  int count = 0;
  VertexSet rest = g.vertices() - removed;
  while (!rest.empty()) {
    rest -= component_of(g, rest, rest.first());
    ++count;
  }
  return count;
}

bool is_connected(const Graph& g) noexcept {
  return component_count(g, VertexSet{}) <= 1;
}

int count_edges_between(const Graph& g, VertexSet a, VertexSet b) {
  if (a.intersects(b)) {
    throw ContractViolation("count_edges_between: sets " + a.to_string() + " and " +
                            b.to_string() + " overlap");
  }
  int count = 0;
  for (Vertex u : a) count += (g.neighbors(u) & b).size();
  return count;
}

bool is_independent(const Graph& g, VertexSet s) noexcept {
  for (Vertex u : s) {
    if (g.neighbors(u).intersects(s)) return false;
  }
  return true;
}

int edges_inside(const Graph& g, VertexSet s) noexcept {
  int twice = 0;
  for (Vertex u : s) twice += (g.neighbors(u) & s).size();
  return twice / 2;
}

namespace {

// Classic include/exclude branching on a vertex of maximum degree, with the
// trivial |chosen| + |candidates| bound.
void mis_branch(const Graph& g, VertexSet candidates, int chosen, int& best) {
  if (chosen + candidates.size() <= best) return;
  if (candidates.empty()) {
    best = chosen;
    return;
  }
  Vertex pick = -1;
  int pick_degree = -1;
  for (Vertex v : candidates) {
    int d = (g.neighbors(v) & candidates).size();
    if (d <= 1) {
      // A vertex of degree <= 1 is always in some maximum independent set.
      mis_branch(g, candidates - g.closed_neighbors(v), chosen + 1, best);
      return;
    }
    if (d > pick_degree) {
      pick = v;
      pick_degree = d;
    }
  }
  mis_branch(g, candidates - g.closed_neighbors(pick), chosen + 1, best);
  VertexSet without = candidates;
  without.erase(pick);
  mis_branch(g, without, chosen, best);
}

}  // namespace

int independence_number(const Graph& g, VertexSet within) {
  int best = 0;
  mis_branch(g, within & g.vertices(), 0, best);
  return best;
}

int independence_number(const Graph& g) { return independence_number(g, g.vertices()); }

Graph induced_subgraph(const Graph& g, VertexSet s) {
  std::vector<Vertex> members = s.to_vector();
  Graph out(static_cast<int>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (g.has_edge(members[i], members[j])) {
        out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header", 0);
  if (n < 0 || n > kMaxVertices || m < 0) {
    throw ParseError("edge list: bad header values", 0);
  }
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    auto offset = static_cast<std::size_t>(std::max<std::streamoff>(0, in.tellg()));
    if (!(in >> u >> v)) {
      throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                           std::to_string(i),
                       offset);
    }
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw ParseError("edge list: invalid edge " + std::to_string(u) + " " +
                           std::to_string(v),
                       offset);
    }
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

}  // namespace factorlab
