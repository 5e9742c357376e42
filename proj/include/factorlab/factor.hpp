#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "factorlab/graph.hpp"
#include "factorlab/rational.hpp"

namespace factorlab {

/// A disjoint pair (S, T) together with the Tutte quantities it induces.
///
/// Components D of G - (S u T) are split by the parity of e(D, T); odd ones are
/// filed under k where e(D, T) = 2k + 1.
struct BarrierPair {
  VertexSet s;
  VertexSet t;
  int delta = 0;
  int h = 0;
  std::map<int, std::vector<VertexSet>> odd_classes;
  std::vector<VertexSet> even_components;

  /// Odd components with at least three edges to T (every class k >= 1).
  std::vector<VertexSet> heavy_odd_components() const;
  /// Number of odd components with exactly one edge to T.
  int singly_attached_count() const;

  /// "S={..} T={..} delta=.. classes={k:count,...}"
  std::string describe() const;
};

/// Certificate: a spanning 2-regular subgraph given by its edge list.
struct TwoFactor {
  std::vector<Edge> edges;
};

/// delta(S,T) = 2|S| - 2|T| + sum_{y in T} d_{G-S}(y) - h(S,T), with the full
/// odd/even component classification. Throws ContractViolation if s, t overlap.
BarrierPair evaluate_delta(const Graph& g, VertexSet s, VertexSet t);

/// True iff delta <= -2. Throws InternalError if delta is odd.
bool is_barrier(const BarrierPair& pair);

/// Decided with Tutte's gadget reduction and a maximum-cardinality matching.
bool has_two_factor(const Graph& g);

std::optional<TwoFactor> find_two_factor(const Graph& g);

/// True iff every vertex has degree 2 in the edge set and all edges exist in g.
bool is_two_factor(const Graph& g, const TwoFactor& f);

enum class Execution { Parallel, Serial };

/// First barrier in enumeration order: S ascending as a bit mask, then T
/// ascending over subsets of V - S. Empty iff g has a 2-factor.
std::optional<BarrierPair> find_barrier(const Graph& g, Execution exec = Execution::Parallel);

/// Barrier with |S| maximum, then |T| minimum, then (S, T) lexicographically
/// smallest.
std::optional<BarrierPair> find_biased_barrier(const Graph& g,
                                               Execution exec = Execution::Parallel);

/// Outcome of one structural clause check; witness is empty on success.
struct ClauseCheck {
  bool pass = true;
  std::string witness;
};

/// The four structural properties every biased barrier enjoys:
///   1. T is independent;
///   2. even components send no edge to T;
///   3. each y in T has at most one edge into each odd component;
///   4. each vertex of an odd component has at most one neighbor in T.
struct BiasedBarrierReport {
  std::array<ClauseCheck, 4> clauses;
  bool all_pass() const noexcept;
};

BiasedBarrierReport verify_biased_barrier_properties(const Graph& g, const BarrierPair& pair);

/// |T| >= |S| + sum_{k>=1} k |C_{2k+1}| + 1.
bool check_T_bound(const BarrierPair& pair);

/// If some odd component has exactly one edge to T then |S| + 1 >= 2 tau.
bool check_singly_attached_bound(const BarrierPair& pair, const Rational& tau);

/// Number of odd components with >= 3 edges to T that y touches.
/// Throws ContractViolation if y is not in pair.t.
int h_of_vertex(const Graph& g, const BarrierPair& pair, Vertex y);

/// An induced linear forest: one path plus isolated vertices.
struct ForestWitness {
  std::vector<Vertex> path;
  std::vector<Vertex> singletons;

  /// Path orders, largest first: {path.size(), 1, 1, ...}.
  std::vector<int> pattern() const;
};

/// Induced P4 + (|T|-2) P1 built from a shortest path inside a heavy odd
/// component. Requires a biased barrier with a heavy odd component; throws
/// ContractViolation otherwise.
ForestWitness extract_p4_witness(const Graph& g, const BarrierPair& pair);

/// Induced P_b + (|T|-3) P1, b >= 7, whose path passes through y0 and two
/// heavy odd components. With no y0 given, the smallest y with h(y) >= 2 is
/// used. Throws ContractViolation when no such vertex exists.
ForestWitness extract_long_path_witness(const Graph& g, const BarrierPair& pair,
                                        std::optional<Vertex> y0 = std::nullopt);

struct InducedForestWitness {
  ForestWitness p4;
  std::optional<ForestWitness> long_path;
};

/// Both constructions; long_path is filled only when some h(y) >= 2.
InducedForestWitness extract_induced_forest_witness(const Graph& g, const BarrierPair& pair);

}  // namespace factorlab
