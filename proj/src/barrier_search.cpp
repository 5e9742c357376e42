#include <atomic>
#include <cstdint>

#include "delta_kernel.hpp"
#include "subsets.hpp"
#include "factorlab/error.hpp"
#include "factorlab/factor.hpp"

namespace factorlab {

namespace {

// 3^n pairs; beyond this the enumerator is not a practical oracle.
constexpr int kMaxBarrierOrder = 24;

void require_enumerable(const Graph& g) {
  if (g.order() > kMaxBarrierOrder) {
    throw ContractViolation("barrier enumeration limited to " + std::to_string(kMaxBarrierOrder) +
                            " vertices, got " + std::to_string(g.order()));
  }
}

// First T (ascending mask) with delta(S,T) <= -2 for this S.
std::optional<VertexSet> first_barrier_t(const Graph& g, VertexSet s) {
  VertexSet universe = g.vertices() - s;
  VertexSet t;
  do {
    if (detail::delta_if_candidate(g, s, t) <= -2) return t;
    t = detail::next_subset(t, universe);
  } while (!t.empty());
  return std::nullopt;
}

// Smallest |T|, then lexicographically smallest T, with (S,T) a barrier.
std::optional<VertexSet> minimal_barrier_t(const Graph& g, VertexSet s) {
  VertexSet universe = g.vertices() - s;
  std::optional<VertexSet> best;
  VertexSet t;
  do {
    bool better = !best || t.size() < best->size() ||
                  (t.size() == best->size() && lex_less(t, *best));
    if (better && detail::delta_if_candidate(g, s, t) <= -2) best = t;
    t = detail::next_subset(t, universe);
  } while (!t.empty());
  return best;
}

struct Candidate {
  VertexSet s;
  VertexSet t;
};

bool biased_before(const Candidate& a, const Candidate& b) {
  if (a.t.size() != b.t.size()) return a.t.size() < b.t.size();
  if (a.s != b.s) return lex_less(a.s, b.s);
  return lex_less(a.t, b.t);
}

}  // namespace

std::optional<BarrierPair> find_barrier(const Graph& g, Execution exec) {
  require_enumerable(g);
  const std::int64_t masks = std::int64_t{1} << g.order();
  const bool parallel = exec == Execution::Parallel;
  std::atomic<std::int64_t> best_s{masks};
  VertexSet best_t;

#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (std::int64_t m = 0; m < masks; ++m) {
    if (m >= best_s.load(std::memory_order_relaxed)) continue;
    VertexSet s(static_cast<std::uint64_t>(m));
    auto t = first_barrier_t(g, s);
    if (!t) continue;
#pragma omp critical(factorlab_find_barrier)
    {
      if (m < best_s.load()) {
        best_s.store(m);
        best_t = *t;
      }
    }
  }
  if (best_s.load() == masks) return std::nullopt;
  return evaluate_delta(g, VertexSet(static_cast<std::uint64_t>(best_s.load())), best_t);
}

std::optional<BarrierPair> find_biased_barrier(const Graph& g, Execution exec) {
  require_enumerable(g);
  const int n = g.order();
  const bool parallel = exec == Execution::Parallel;

  // Walk |S| downwards; the first size with any barrier fixes |S|.
  for (int k = n; k >= 0; --k) {
    std::vector<VertexSet> layer = detail::subsets_of_size(n, k);
    const auto count = static_cast<std::int64_t>(layer.size());
    std::optional<Candidate> best;

#pragma omp parallel if (parallel)
    {
      std::optional<Candidate> local;
#pragma omp for schedule(dynamic, 16) nowait
      for (std::int64_t i = 0; i < count; ++i) {
        VertexSet s = layer[static_cast<std::size_t>(i)];
        auto t = minimal_barrier_t(g, s);
        if (!t) continue;
        Candidate c{s, *t};
        if (!local || biased_before(c, *local)) local = c;
      }
#pragma omp critical(factorlab_biased_barrier)
      {
        if (local && (!best || biased_before(*local, *best))) best = local;
      }
    }
    if (best) return evaluate_delta(g, best->s, best->t);
  }
  return std::nullopt;
}

}  // namespace factorlab
