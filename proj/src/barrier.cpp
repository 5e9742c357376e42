#include <algorithm>
#include <sstream>

#include "delta_kernel.hpp"
#include "factorlab/error.hpp"
#include "factorlab/factor.hpp"

namespace factorlab {

std::vector<VertexSet> BarrierPair::heavy_odd_components() const {
  std::vector<VertexSet> out;
  for (const auto& [k, comps] : odd_classes) {
    if (k >= 1) out.insert(out.end(), comps.begin(), comps.end());
  }
  std::sort(out.begin(), out.end(),
            [](VertexSet a, VertexSet b) { return a.first() < b.first(); });
  return out;
}

int BarrierPair::singly_attached_count() const {
  auto it = odd_classes.find(0);
  return it == odd_classes.end() ? 0 : static_cast<int>(it->second.size());
}

std::string BarrierPair::describe() const {
  std::ostringstream out;
  out << "S=" << s.to_string() << " T=" << t.to_string() << " delta=" << delta
      << " classes={";
  bool first = true;
  for (const auto& [k, comps] : odd_classes) {
    if (!first) out << ',';
    out << k << ':' << comps.size();
    first = false;
  }
  out << '}';
  return out.str();
}

BarrierPair evaluate_delta(const Graph& g, VertexSet s, VertexSet t) {
  if (s.intersects(t)) {
    throw ContractViolation("evaluate_delta: S=" + s.to_string() + " and T=" + t.to_string() +
                            " overlap");
  }
  BarrierPair pair;
  pair.s = s;
  pair.t = t;
  for (VertexSet comp : components(g, s | t)) {
    int to_t = count_edges_between(g, comp, t);
    if (to_t % 2 == 1) {
      pair.odd_classes[(to_t - 1) / 2].push_back(comp);
      ++pair.h;
    } else {
      pair.even_components.push_back(comp);
    }
  }
  pair.delta = 2 * s.size() - 2 * t.size() + detail::degree_sum_outside(g, s, t) - pair.h;
  return pair;
}

bool is_barrier(const BarrierPair& pair) {
  if (pair.delta % 2 != 0) {
    throw InternalError("delta parity violated for " + pair.describe());
  }
  return pair.delta <= -2;
}

bool BiasedBarrierReport::all_pass() const noexcept {
  for (const auto& c : clauses) {
    if (!c.pass) return false;
  }
  return true;
}

BiasedBarrierReport verify_biased_barrier_properties(const Graph& g, const BarrierPair& pair) {
  BiasedBarrierReport report;
  auto fail = [&](int clause, std::string witness) {
    auto& c = report.clauses[clause];
    if (c.pass) {
      c.pass = false;
      c.witness = std::move(witness);
    }
  };
  auto edge_text = [](Vertex u, Vertex v) {
    return "edge " + std::to_string(u) + "-" + std::to_string(v);
  };

  for (Vertex u : pair.t) {
    for (Vertex v : g.neighbors(u) & pair.t) {
      if (u < v) fail(0, edge_text(u, v));
    }
  }
  for (VertexSet comp : pair.even_components) {
    for (Vertex y : pair.t) {
      VertexSet hit = g.neighbors(y) & comp;
      if (!hit.empty()) fail(1, edge_text(y, hit.first()));
    }
  }
  for (const auto& [k, comps] : pair.odd_classes) {
    for (VertexSet comp : comps) {
      for (Vertex y : pair.t) {
        if ((g.neighbors(y) & comp).size() > 1) {
          fail(2, "vertex " + std::to_string(y) + " -> component " + comp.to_string());
        }
      }
      for (Vertex x : comp) {
        if ((g.neighbors(x) & pair.t).size() > 1) fail(3, "vertex " + std::to_string(x));
      }
    }
  }
  return report;
}

bool check_T_bound(const BarrierPair& pair) {
  int weighted = 0;
  for (const auto& [k, comps] : pair.odd_classes) {
    weighted += k * static_cast<int>(comps.size());
  }
  return pair.t.size() >= pair.s.size() + weighted + 1;
}

bool check_singly_attached_bound(const BarrierPair& pair, const Rational& tau) {
  if (pair.singly_attached_count() == 0) return true;
  if (tau.is_infinite()) return false;
  // |S| + 1 >= 2 num/den  <=>  (|S| + 1) den >= 2 num
  return (pair.s.size() + 1) * tau.den() >= 2 * tau.num();
}

int h_of_vertex(const Graph& g, const BarrierPair& pair, Vertex y) {
  if (!pair.t.contains(y)) {
    throw ContractViolation("h_of_vertex: vertex " + std::to_string(y) + " is not in T");
  }
  int count = 0;
  for (VertexSet comp : pair.heavy_odd_components()) {
    if (g.neighbors(y).intersects(comp)) ++count;
  }
  return count;
}

}  // namespace factorlab
