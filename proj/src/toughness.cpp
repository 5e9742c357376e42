#include "factorlab/toughness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>

#include "factorlab/error.hpp"
#include "subsets.hpp"

namespace factorlab {

namespace {

// a/b < c/d for positive denominators.
bool ratio_less(int a, int b, int c, int d) { return a * d < c * b; }

struct Layered {
  int best_size = 0;
  int best_parts = 1;
  std::vector<VertexSet> minimizers;
};

// Minimum |S| / c(G - S) over cutsets of a connected non-complete graph.
// Cutsets are visited by increasing size; a size k can only compete while
// k / min(n - k, alpha) does not exceed the best ratio so far.
Layered minimum_ratio(const Graph& g, bool collect, bool parallel) {
  const int n = g.order();
  const int alpha = independence_number(g);

  Layered result;
  Vertex low = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) < g.degree(low)) low = v;
  }
  result.best_size = g.degree(low);
  result.best_parts = component_count(g, g.neighbors(low));

  for (int k = 1; k <= n - 2; ++k) {
    int max_parts = std::min(n - k, alpha);
    if (ratio_less(result.best_size, result.best_parts, k, max_parts)) break;

    std::vector<VertexSet> layer = detail::subsets_of_size(n, k);
    const auto count = static_cast<std::int64_t>(layer.size());

#pragma omp parallel if (parallel)
    {
      int local_parts = 0;  // best component count at this size
      std::vector<VertexSet> local_sets;
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 0; i < count; ++i) {
        VertexSet s = layer[static_cast<std::size_t>(i)];
        int parts = component_count(g, s);
        if (parts < 2 || parts < local_parts) continue;
        if (parts > local_parts) {
          local_parts = parts;
          local_sets.clear();
        }
        if (collect) local_sets.push_back(s);
      }
#pragma omp critical(factorlab_toughness_merge)
      {
        if (local_parts >= 2) {
          if (ratio_less(k, local_parts, result.best_size, result.best_parts)) {
            result.best_size = k;
            result.best_parts = local_parts;
            result.minimizers = std::move(local_sets);
          } else if (!ratio_less(result.best_size, result.best_parts, k, local_parts)) {
            result.minimizers.insert(result.minimizers.end(), local_sets.begin(), local_sets.end());
          }
        }
      }
    }
  }
  return result;
}

}  // namespace

Rational toughness(const Graph& g, Execution exec) {
  if (g.is_complete()) return Rational::infinity();
  if (!is_connected(g)) return Rational(0);
  Layered r = minimum_ratio(g, false, exec == Execution::Parallel);
  return Rational(r.best_size, r.best_parts);
}

ToughnessResult toughsets(const Graph& g, Execution exec) {
  if (g.is_complete()) throw ContractViolation("toughsets: complete graph has no cutset");
  if (!is_connected(g)) throw ContractViolation("toughsets: graph is disconnected");
  Layered r = minimum_ratio(g, true, exec == Execution::Parallel);
  std::sort(r.minimizers.begin(), r.minimizers.end(), lex_less);
  return ToughnessResult{Rational(r.best_size, r.best_parts), std::move(r.minimizers)};
}

bool is_t_tough(const Graph& g, const Rational& t, Execution exec) {
  if (t == Rational(0)) return true;
  if (g.is_complete()) return true;
  if (t.is_infinite()) return false;
  const int n = g.order();
  const std::int64_t masks = std::int64_t{1} << n;
  const VertexSet all = g.vertices();
  std::atomic<bool> violated{false};

#pragma omp parallel for schedule(dynamic, 256) if (exec == Execution::Parallel)
  for (std::int64_t m = 0; m < masks; ++m) {
    if (violated.load(std::memory_order_relaxed)) continue;
    VertexSet s(static_cast<std::uint64_t>(m));
    if ((all - s).size() < 2) continue;
    int parts = component_count(g, s);
    if (parts < 2) continue;
    // t * c > |S|  <=>  num * c > |S| * den
    if (t.num() * parts > static_cast<std::int64_t>(s.size()) * t.den()) {
      violated.store(true, std::memory_order_relaxed);
    }
  }
  return !violated.load();
}

std::vector<NeighborhoodCheck> check_toughset_neighborhood(const Graph& g, VertexSet s) {
  if (g.is_complete() || !is_connected(g)) {
    throw ContractViolation("toughset check needs a connected non-complete graph");
  }
  auto comps = components(g, s);
  if (comps.size() < 2) throw ContractViolation(s.to_string() + " is not a cutset");
  Rational ratio(s.size(), static_cast<std::int64_t>(comps.size()));
  if (ratio != toughness(g)) {
    throw ContractViolation(s.to_string() + " has ratio " + ratio.to_string() +
                            " which is not the toughness");
  }
  std::vector<NeighborhoodCheck> out;
  for (Vertex x : s) {
    NeighborhoodCheck c{x, false, {}};
    for (VertexSet comp : comps) {
      if (g.neighbors(x).intersects(comp)) c.touched.push_back(comp);
    }
    c.pass = c.touched.size() >= 2;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace factorlab
