#include "factorlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <variant>

#include "json.hpp"

#include "factorlab/error.hpp"
#include "factorlab/graph6.hpp"
#include "factorlab/toughness.hpp"

namespace factorlab {

std::string to_string(Status s) {
  switch (s) {
    case Status::Consistent: return "CONSISTENT";
    case Status::Counterexample: return "COUNTEREXAMPLE";
    case Status::HypothesisUnmet: return "HYPOTHESIS-UNMET";
  }
  return "?";
}

Status classify(bool hypothesis, bool two_factor, bool exception) {
  if (!hypothesis) return Status::HypothesisUnmet;
  if (two_factor || exception) return Status::Consistent;
  return Status::Counterexample;
}

Clause make_clause(const std::string& id, const LinearForestPattern& r,
                   std::optional<Rational> t, std::optional<bool> strict) {
  Clause c;
  c.id = id;
  if (id == "1" || id == "1a" || id == "1b") {
    c.t = Rational(1);
    c.strict = false;
    if (id == "1a" || (id == "1" && r == parse_pattern("P2+3P1"))) {
      c.exceptions.push_back(ExceptionCase::Case1a);
    } else if (id == "1b" || (id == "1" && r == parse_pattern("P3+2P1"))) {
      c.exceptions.push_back(ExceptionCase::Case1b);
    }
  } else if (id == "2" || id == "2a" || id == "2b") {
    c.t = Rational(1);
    c.strict = true;
    if (id == "2a" || (id == "2" && !(r == parse_pattern("P4+3P1")))) {
      c.exceptions.push_back(ExceptionCase::Case2a);
    }
    if (id == "2b" || (id == "2" && r == parse_pattern("P2+5P1"))) {
      c.exceptions.push_back(ExceptionCase::Case2b);
    }
  } else if (id == "3") {
    c.t = Rational(7, 6);
    c.strict = true;
    c.exceptions.push_back(ExceptionCase::Case3);
  } else if (id == "4") {
    c.t = Rational(3, 2);
    c.strict = false;
  } else {
    throw ContractViolation("unknown clause '" + id + "' (expected 1, 1a, 1b, 2, 2a, 2b, 3 or 4)");
  }
  if (t) c.t = *t;
  if (strict) c.strict = *strict;
  return c;
}

std::string Verdict::to_string() const {
  std::ostringstream out;
  out << (graph_id.empty() ? "graph" : graph_id) << ' ' << factorlab::to_string(status)
      << " tau=" << toughness.to_string() << " tough=" << (tough_enough ? "yes" : "no")
      << " r-free=" << (r_free ? "yes" : "no") << " 2-factor=" << (has_two_factor ? "yes" : "no");
  if (exception) out << " exception=" << factorlab::to_string(*exception);
  return out.str();
}

Verdict verify_case(const Graph& g, const LinearForestPattern& r, const Clause& clause,
                    std::string graph_id, Execution exec) {
  if (g.order() < 3) throw ContractViolation("theorem clauses need at least 3 vertices");
  Verdict v;
  v.graph_id = std::move(graph_id);
  v.toughness = toughness(g, exec);
  v.tough_enough = clause.tough_enough(v.toughness);
  v.r_free = is_r_free(g, r);
  v.has_two_factor = has_two_factor(g);
  if (v.hypothesis() && !v.has_two_factor) {
    for (ExceptionCase c : clause.exceptions) {
      if (check_spanning_exception(g, c)) {
        v.exception = c;
        break;
      }
    }
  }
  v.status = classify(v.hypothesis(), v.has_two_factor, v.exception.has_value());
  return v;
}

std::string ScanReport::to_text() const {
  std::ostringstream out;
  out << "processed " << processed << '\n';
  for (Status s : {Status::Consistent, Status::Counterexample, Status::HypothesisUnmet}) {
    out << to_string(s) << ' ' << count(s) << '\n';
  }
  out << "errors " << errors.size() << '\n';
  for (const auto& g6 : counterexamples) out << "counterexample " << g6 << '\n';
  for (const auto& e : errors) out << "error line " << e.line << ": " << e.message << '\n';
  out << "seconds " << seconds << '\n';
  return out.str();
}

std::string ScanReport::to_json() const {
  nlohmann::json j;
  j["processed"] = processed;
  j["counts"] = {{"CONSISTENT", count(Status::Consistent)},
                 {"COUNTEREXAMPLE", count(Status::Counterexample)},
                 {"HYPOTHESIS-UNMET", count(Status::HypothesisUnmet)}};
  j["counterexamples"] = counterexamples;
  j["errors"] = nlohmann::json::array();
  for (const auto& e : errors) j["errors"].push_back({{"line", e.line}, {"message", e.message}});
  j["seconds"] = seconds;
  return j.dump(2);
}

ScanReport scan(std::istream& in, const LinearForestPattern& r, const Clause& clause,
                Execution exec) {
  constexpr std::size_t kBatch = 2048;
  const auto start = std::chrono::steady_clock::now();
  ScanReport report;

  struct Line {
    std::size_t number;
    std::string text;
  };
  using Outcome = std::variant<Status, std::string>;  // status or error message

  std::vector<Line> batch;
  std::vector<Outcome> outcomes;
  std::size_t line_number = 0;

  auto flush = [&] {
    outcomes.assign(batch.size(), Outcome{Status::Consistent});
    const auto count = static_cast<std::int64_t>(batch.size());
#pragma omp parallel for schedule(dynamic, 8) if (exec == Execution::Parallel)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto k = static_cast<std::size_t>(i);
      try {
        Graph g = parse_graph6(batch[k].text);
        outcomes[k] = verify_case(g, r, clause, {}, Execution::Serial).status;
      } catch (const Error& e) {
        outcomes[k] = std::string(e.what());
      }
    }
    for (std::size_t k = 0; k < batch.size(); ++k) {
      ++report.processed;
      if (auto* s = std::get_if<Status>(&outcomes[k])) {
        ++report.counts[static_cast<std::size_t>(*s)];
        if (*s == Status::Counterexample) report.counterexamples.push_back(batch[k].text);
      } else {
        report.errors.push_back({batch[k].number, std::get<std::string>(outcomes[k])});
      }
    }
    batch.clear();
  };

  std::string text;
  while (std::getline(in, text)) {
    ++line_number;
    while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.pop_back();
    if (text.empty()) continue;
    batch.push_back({line_number, text});
    if (batch.size() == kBatch) flush();
  }
  flush();

  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

// Canonical code: the minimum upper-triangle bit string over all vertex
// orders that list colour classes of the stable degree refinement in
// increasing colour, permuting freely inside each class.
struct Canonical {
  std::uint64_t code;
  std::vector<Vertex> order;  // order[i] is the vertex placed at position i
};

std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      for (Vertex w : g.neighbors(v)) s.push_back(color[static_cast<std::size_t>(w)]);
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), color[static_cast<std::size_t>(v)]);
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      next[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) -
          distinct.begin());
    }
    bool stable = std::set<int>(next.begin(), next.end()).size() ==
                  std::set<int>(color.begin(), color.end()).size();
    color = std::move(next);
    if (stable) break;
  }
  return color;
}

std::uint64_t code_of(const Graph& g, const std::vector<Vertex>& order) {
  std::uint64_t code = 0;
  const int n = g.order();
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      code = (code << 1) | (g.has_edge(order[static_cast<std::size_t>(i)],
                                       order[static_cast<std::size_t>(j)]) ? 1u : 0u);
    }
  }
  return code;
}

Canonical canonical_form(const Graph& g) {
  const int n = g.order();
  auto color = refine_colors(g);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return color[static_cast<std::size_t>(a)] < color[static_cast<std::size_t>(b)];
  });
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && color[static_cast<std::size_t>(order[j])] ==
                                   color[static_cast<std::size_t>(order[i])]) {
      ++j;
    }
    cells.emplace_back(i, j);
    i = j;
  }

  Canonical best{~std::uint64_t{0}, order};
  // Odometer over the permutations of every cell.
  std::vector<Vertex> current = order;
  while (true) {
    std::uint64_t code = code_of(g, current);
    if (code < best.code) best = {code, current};
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto first = current.begin() + static_cast<std::ptrdiff_t>(cells[c].first);
      auto last = current.begin() + static_cast<std::ptrdiff_t>(cells[c].second);
      if (std::next_permutation(first, last)) break;
    }
    if (c == cells.size()) break;
  }
  return best;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<Vertex> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
  Graph out(g.order());
  for (auto [u, v] : g.edges()) {
    out.add_edge(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]);
  }
  return out;
}

}  // namespace

std::vector<std::string> enumerate_small_graphs(int n) {
  if (n < 1) throw ContractViolation("enumerate_small_graphs: n must be at least 1");
  if (n > 7) {
    throw ContractViolation(
        "enumerate_small_graphs: n > 7 is not supported; pipe graph6 from an external generator "
        "(e.g. geng -c) into scan");
  }
  // Every connected graph has a vertex whose removal leaves it connected, so
  // extending each smaller connected graph by one vertex reaches all of them.
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, Graph>> next;
    for (const Graph& base : level) {
      const std::uint64_t subsets = std::uint64_t{1} << (k - 1);
      for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        Graph g(k, base.edges());
        for (Vertex v : VertexSet(mask)) g.add_edge(v, k - 1);
        Canonical c = canonical_form(g);
        if (seen.insert(c.code).second) next.emplace_back(c.code, relabel(g, c.order));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  std::vector<std::string> out;
  out.reserve(level.size());
  for (const Graph& g : level) out.push_back(encode_graph6(g));
  return out;
}

}  // namespace factorlab
