#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "factorlab/forbidden.hpp"
#include "factorlab/graph.hpp"
#include "factorlab/rational.hpp"

namespace factorlab {

/// A constructed graph with its role map. Block roles ("S", "T", "D" or
/// "D1"/"D2") partition the vertex set; named vertices ("x1", "t3", "y2",
/// ...) are singleton roles.
struct FamilyInstance {
  std::string name;
  Graph graph;
  std::map<std::string, VertexSet> roles;

  VertexSet role(const std::string& r) const;
  /// S, T and everything else.
  VertexSet s() const { return role("S"); }
  VertexSet t() const { return role("T"); }
  VertexSet d() const { return graph.vertices() - s() - t(); }

  /// One line per role, "role: v v ...", block roles first.
  std::string role_sidecar() const;
};

using FamilyParams = std::map<std::string, int>;

/// Names: H0..H12, Kmn (m, n), Pn, Cn, Kn (n). H5 takes p >= 5 (default 5),
/// H12 takes p >= 3 (default 3). Throws ContractViolation on an unknown name
/// or an out-of-range parameter.
///
/// Numbering is S, then T, then the rest, each in subscript order.
FamilyInstance build_family(const std::string& name, const FamilyParams& params = {});

enum class ExceptionCase { Case1a, Case1b, Case2a, Case2b, Case3 };

std::string to_string(ExceptionCase c);
/// Accepts "1a", "1b", "2a", "2b", "3".
std::optional<ExceptionCase> parse_exception_case(const std::string& text);

/// True when g contains one of the case's graphs spanning it, with S/T roles
/// carried over, such that every edge of g outside the copy lies in the case's
/// allowed set (S to rest for 1a/1b; also inside S for 2a and 3; also inside
/// the rest for 2b). Case 1a additionally accepts g isomorphic to H0.
bool check_spanning_exception(const Graph& g, ExceptionCase c);

struct CatalogEntry {
  std::string family;
  FamilyParams params;
  Rational toughness;
  std::vector<LinearForestPattern> free_of;
  bool has_two_factor;
};

/// Claimed toughness, forbidden linear forests and 2-factor status for each
/// family over its tested parameter range.
const std::vector<CatalogEntry>& catalog();

}  // namespace factorlab
