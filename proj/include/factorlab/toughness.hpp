#pragma once

#include <string>
#include <vector>

#include "factorlab/factor.hpp"
#include "factorlab/graph.hpp"
#include "factorlab/rational.hpp"

namespace factorlab {

/// Exact toughness: infinity for complete graphs, 0 for disconnected ones,
/// otherwise the minimum of |S| / c(G - S) over cutsets S.
Rational toughness(const Graph& g, Execution exec = Execution::Parallel);

/// Every cutset S has t * c(G - S) <= |S|. Throws ContractViolation on t < 0.
bool is_t_tough(const Graph& g, const Rational& t, Execution exec = Execution::Parallel);

struct ToughnessResult {
  Rational value;
  std::vector<VertexSet> toughsets;  // sorted lexicographically
};

/// Toughness together with every cutset attaining it. Throws
/// ContractViolation for complete or disconnected graphs.
ToughnessResult toughsets(const Graph& g, Execution exec = Execution::Parallel);

struct NeighborhoodCheck {
  Vertex x;
  bool pass;
  std::vector<VertexSet> touched;  // components of G - S adjacent to x
};

/// For each x in s, the components of G - s it is adjacent to; x passes when
/// there are at least two. Throws ContractViolation if s is not a toughset.
std::vector<NeighborhoodCheck> check_toughset_neighborhood(const Graph& g, VertexSet s);

}  // namespace factorlab
