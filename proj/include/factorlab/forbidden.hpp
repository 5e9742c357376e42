#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "factorlab/graph.hpp"

namespace factorlab {

/// Disjoint union of paths, described by path orders sorted descending.
/// "P4+3P1" is {4, 1, 1, 1}.
class LinearForestPattern {
public:
  /// Throws ContractViolation if parts is empty, holds a zero, or sums past 64.
  explicit LinearForestPattern(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int order() const noexcept;
  /// Canonical text, e.g. "P4+3P1".
  std::string to_string() const;

  bool operator==(const LinearForestPattern&) const = default;

private:
  std::vector<int> parts_;
};

/// Grammar: term ('+' term)*, term := [multiplier] 'P' order. Whitespace is
/// ignored. Throws ParseError with the offending position.
LinearForestPattern parse_pattern(std::string_view text);

/// One vertex list per pattern part, in the pattern's part order; consecutive
/// entries of a list are the path edges.
struct Embedding {
  std::vector<std::vector<Vertex>> paths;

  /// "P4: 0-1-2-3; P1: 5"
  std::string to_string() const;
};

/// Distinct vertices, every path edge present, and no other edge among the
/// image vertices.
bool is_induced_embedding(const Graph& g, const Embedding& e);

/// Backtracking search for an induced copy of r; deterministic.
std::optional<Embedding> find_induced(const Graph& g, const LinearForestPattern& r);

bool is_r_free(const Graph& g, const LinearForestPattern& r);

/// The 33 linear forests on 5, 6 and 7 vertices.
const std::vector<LinearForestPattern>& small_linear_forests();

}  // namespace factorlab
