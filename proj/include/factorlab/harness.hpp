#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "factorlab/factor.hpp"
#include "factorlab/families.hpp"
#include "factorlab/forbidden.hpp"
#include "factorlab/graph.hpp"
#include "factorlab/rational.hpp"

namespace factorlab {

enum class Status { Consistent, Counterexample, HypothesisUnmet };

std::string to_string(Status s);

/// COUNTEREXAMPLE exactly when the hypothesis holds, there is no 2-factor
/// and no exception matched.
Status classify(bool hypothesis, bool two_factor, bool exception);

/// A theorem clause instantiated for one R: the toughness threshold, whether
/// the comparison is strict, and the exception cases that excuse a graph.
struct Clause {
  std::string id;
  Rational t;
  bool strict = false;
  std::vector<ExceptionCase> exceptions;

  bool tough_enough(const Rational& tau) const { return strict ? tau > t : tau >= t; }
};

/// Clause ids: "1" (t = 1, >=), "2" (t > 1), "3" (t > 7/6), "4" (t >= 3/2),
/// and the single-exception forms "1a", "1b", "2a", "2b". Exceptions for
/// "1", "2" and "3" depend on r as tabulated in the README. `t` and `strict`
/// override the clause defaults. Throws ContractViolation on an unknown id.
Clause make_clause(const std::string& id, const LinearForestPattern& r,
                   std::optional<Rational> t = std::nullopt,
                   std::optional<bool> strict = std::nullopt);

struct Verdict {
  std::string graph_id;
  Rational toughness;
  bool tough_enough = false;
  bool r_free = false;
  bool has_two_factor = false;
  std::optional<ExceptionCase> exception;  // the case that matched, if any
  Status status = Status::HypothesisUnmet;

  bool hypothesis() const { return tough_enough && r_free; }
  std::string to_string() const;
};

/// Throws ContractViolation when g has fewer than 3 vertices.
Verdict verify_case(const Graph& g, const LinearForestPattern& r, const Clause& clause,
                    std::string graph_id = {}, Execution exec = Execution::Parallel);

struct ScanError {
  std::size_t line;  // 1-based
  std::string message;
};

struct ScanReport {
  std::array<std::size_t, 3> counts{};  // indexed by Status
  std::vector<std::string> counterexamples;  // graph6, sorted
  std::vector<ScanError> errors;             // sorted by line
  std::size_t processed = 0;                 // non-blank lines
  double seconds = 0;

  std::size_t count(Status s) const { return counts[static_cast<std::size_t>(s)]; }
  std::string to_text() const;
  std::string to_json() const;
};

/// One verdict per non-blank graph6 line. Lines are read in batches and
/// checked in parallel; unparsable lines and graphs under 3 vertices are
/// recorded as errors and the scan continues.
ScanReport scan(std::istream& in, const LinearForestPattern& r, const Clause& clause,
                Execution exec = Execution::Parallel);

/// Connected graphs on n vertices up to isomorphism, as graph6 lines sorted
/// by canonical code. Throws ContractViolation for n < 1 or n > 7.
std::vector<std::string> enumerate_small_graphs(int n);

}  // namespace factorlab
