#include <random>

#include "doctest.h"
#include "factorlab/error.hpp"
#include "factorlab/factor.hpp"
#include "factorlab/families.hpp"
#include "factorlab/forbidden.hpp"
#include "factorlab/graph6.hpp"
#include "oracles.hpp"

using namespace factorlab;

namespace {

Graph fam(const std::string& name, FamilyParams p = {}) { return build_family(name, p).graph; }

// Smallest barrier by (-|S|, |T|, S, T) over all 3^n assignments.
std::optional<std::pair<VertexSet, VertexSet>> brute_biased(const Graph& g) {
  const int n = g.order();
  std::optional<std::pair<VertexSet, VertexSet>> best;
  auto before = [](VertexSet s1, VertexSet t1, VertexSet s2, VertexSet t2) {
    if (s1.size() != s2.size()) return s1.size() > s2.size();
    if (t1.size() != t2.size()) return t1.size() < t2.size();
    if (s1 != s2) return lex_less(s1, s2);
    return lex_less(t1, t2);
  };
  std::vector<int> role(static_cast<std::size_t>(n), 0);
  while (true) {
    VertexSet s, t;
    for (int v = 0; v < n; ++v) {
      if (role[static_cast<std::size_t>(v)] == 1) s.insert(v);
      if (role[static_cast<std::size_t>(v)] == 2) t.insert(v);
    }
    if (oracle::delta(g, s.bits(), t.bits()) <= -2 &&
        (!best || before(s, t, best->first, best->second))) {
      best = std::make_pair(s, t);
    }
    int i = 0;
    while (i < n && role[static_cast<std::size_t>(i)] == 2) role[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
    ++role[static_cast<std::size_t>(i)];
  }
  return best;
}

void check_witness(const Graph& g, const ForestWitness& w) {
  VertexSet image = VertexSet::of(w.path) | VertexSet::of(w.singletons);
  CHECK(oracle::induces_linear_forest(g, image.bits(), w.pattern()));
  Embedding e;
  e.paths.push_back(w.path);
  for (Vertex v : w.singletons) e.paths.push_back({v});
  CHECK(is_induced_embedding(g, e));
}

}  // namespace

TEST_CASE("delta of the H12 pair") {
  auto h = build_family("H12", {{"p", 3}});
  auto pair = evaluate_delta(h.graph, h.s(), h.t());
  CHECK(pair.delta == -2);
  CHECK(pair.h == 1);
  REQUIRE(pair.odd_classes.count(1) == 1);
  CHECK(pair.odd_classes.at(1) == std::vector<VertexSet>{h.d()});
  CHECK(is_barrier(pair));
}

TEST_CASE("delta of trivial pairs") {
  auto empty = evaluate_delta(fam("Kn", {{"n", 4}}), {}, {});
  CHECK(empty.delta == 0);
  CHECK(empty.h == 0);
  CHECK(empty.even_components.size() == 1);

  auto k4 = evaluate_delta(fam("Kn", {{"n", 4}}), {}, VertexSet{0});
  CHECK(k4.delta == 0);
  CHECK_FALSE(is_barrier(k4));

  CHECK_THROWS_AS(evaluate_delta(fam("Kn", {{"n", 4}}), VertexSet{1}, VertexSet{1, 2}),
                  ContractViolation);
}

TEST_CASE("odd delta is an internal error") {
  BarrierPair p;
  p.delta = -1;
  CHECK_THROWS_AS(is_barrier(p), InternalError);
}

TEST_CASE("delta is even and matches its definition") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_graph(rng, n, 0.45);
    std::uint64_t mask = VertexSet::full(n).bits();
    VertexSet s(rng() & mask);
    VertexSet t = VertexSet(rng() & mask) - s;
    auto pair = evaluate_delta(g, s, t);
    CHECK(pair.delta % 2 == 0);
    CHECK(pair.delta == oracle::delta(g, s.bits(), t.bits()));
    int h = 0;
    for (const auto& [k, comps] : pair.odd_classes) {
      for (VertexSet c : comps) CHECK(count_edges_between(g, c, t) == 2 * k + 1);
      h += static_cast<int>(comps.size());
    }
    CHECK(h == pair.h);
    for (VertexSet c : pair.even_components) CHECK(count_edges_between(g, c, t) % 2 == 0);
  }
}

TEST_CASE("2-factor decisions on named graphs") {
  for (int n = 3; n <= 9; ++n) CHECK(has_two_factor(fam("Cn", {{"n", n}})));
  CHECK_FALSE(has_two_factor(fam("H12", {{"p", 3}})));
  for (int n = 2; n <= 6; ++n) CHECK_FALSE(has_two_factor(fam("Kmn", {{"m", n}, {"n", n - 1}})));
  CHECK_FALSE(has_two_factor(fam("H5", {{"p", 5}})));
  CHECK_FALSE(has_two_factor(fam("Pn", {{"n", 5}})));
  CHECK(has_two_factor(Graph(0)));
}

TEST_CASE("2-factor certificates") {
  Graph c6 = fam("Cn", {{"n", 6}});
  auto f = find_two_factor(c6);
  REQUIRE(f);
  CHECK(f->edges.size() == 6);
  CHECK(is_two_factor(c6, *f));

  Graph k4 = fam("Kn", {{"n", 4}});
  auto h = find_two_factor(k4);
  REQUIRE(h);
  CHECK(is_two_factor(k4, *h));

  CHECK_FALSE(find_two_factor(fam("H0")));

  TwoFactor bogus{{{0, 1}, {1, 2}, {2, 0}}};
  CHECK_FALSE(is_two_factor(k4, bogus));
}

TEST_CASE("barrier search on named graphs") {
  CHECK_FALSE(find_barrier(fam("Cn", {{"n", 5}})));
  auto h12 = find_barrier(fam("H12", {{"p", 3}}));
  REQUIRE(h12);
  CHECK(h12->delta <= -2);
  auto k32 = find_barrier(fam("Kmn", {{"m", 3}, {"n", 2}}));
  REQUIRE(k32);
  CHECK(k32->delta <= -2);
}

TEST_CASE("biased barrier of H0 and H12") {
  auto h0 = build_family("H0");
  auto b0 = find_biased_barrier(h0.graph);
  REQUIRE(b0);
  CHECK(b0->s.empty());
  CHECK(b0->t == h0.t());
  CHECK(check_T_bound(*b0));

  auto h12 = build_family("H12", {{"p", 3}});
  auto b12 = find_biased_barrier(h12.graph);
  REQUIRE(b12);
  CHECK(verify_biased_barrier_properties(h12.graph, *b12).all_pass());
  CHECK(check_T_bound(*b12));

  CHECK_FALSE(find_biased_barrier(fam("Cn", {{"n", 7}})));
}

TEST_CASE("biased barrier matches exhaustive selection") {
  std::mt19937_64 rng(17);
  int compared = 0;
  for (int i = 0; i < 400; ++i) {
    int n = 3 + static_cast<int>(rng() % 5);
    Graph g = oracle::random_graph(rng, n, 0.5);
    auto expected = brute_biased(g);
    auto serial = find_biased_barrier(g, Execution::Serial);
    auto parallel = find_biased_barrier(g, Execution::Parallel);
    REQUIRE(serial.has_value() == expected.has_value());
    REQUIRE(parallel.has_value() == expected.has_value());
    if (!expected) continue;
    ++compared;
    CHECK(serial->s == expected->first);
    CHECK(serial->t == expected->second);
    CHECK(parallel->s == serial->s);
    CHECK(parallel->t == serial->t);
  }
  CHECK(compared > 50);
}

TEST_CASE("structural property checker reports violations") {
  Graph c5 = fam("Cn", {{"n", 5}});
  auto pair = evaluate_delta(c5, {}, VertexSet{0, 1});
  auto report = verify_biased_barrier_properties(c5, pair);
  CHECK_FALSE(report.clauses[0].pass);
  CHECK(report.clauses[0].witness.find("0-1") != std::string::npos);
  CHECK_FALSE(report.all_pass());

  auto bad = evaluate_delta(c5, VertexSet{0, 1, 2}, {});
  CHECK_FALSE(check_T_bound(bad));
}

TEST_CASE("h of a vertex") {
  auto h0 = build_family("H0");
  auto b0 = evaluate_delta(h0.graph, h0.s(), h0.t());
  CHECK(h_of_vertex(h0.graph, b0, h0.role("t1").first()) == 2);

  auto h12 = build_family("H12", {{"p", 3}});
  auto b12 = evaluate_delta(h12.graph, h12.s(), h12.t());
  CHECK(h_of_vertex(h12.graph, b12, h12.role("t1").first()) == 1);
  CHECK_THROWS_AS(h_of_vertex(h12.graph, b12, h12.role("x").first()), ContractViolation);

  Graph c5 = fam("Cn", {{"n", 5}});
  auto light = evaluate_delta(c5, {}, VertexSet{0});
  CHECK(h_of_vertex(c5, light, 0) == 0);
}

TEST_CASE("forest witnesses on H0 and H12") {
  auto h0 = build_family("H0");
  auto b0 = *find_biased_barrier(h0.graph);
  auto w0 = extract_induced_forest_witness(h0.graph, b0);
  CHECK(w0.p4.pattern() == std::vector<int>{4, 1});
  check_witness(h0.graph, w0.p4);
  REQUIRE(w0.long_path);
  check_witness(h0.graph, *w0.long_path);

  auto long0 = extract_long_path_witness(h0.graph, b0, h0.role("t1").first());
  CHECK(long0.path.size() == 7);
  CHECK(long0.singletons.empty());
  check_witness(h0.graph, long0);

  auto h12 = build_family("H12", {{"p", 3}});
  auto b12 = *find_biased_barrier(h12.graph);
  auto w12 = extract_induced_forest_witness(h12.graph, b12);
  CHECK(w12.p4.pattern() == std::vector<int>{4, 1});
  check_witness(h12.graph, w12.p4);
  CHECK_FALSE(w12.long_path);
  CHECK_THROWS_AS(extract_long_path_witness(h12.graph, b12), ContractViolation);
}

TEST_CASE("witness extraction rejects pairs without heavy odd components") {
  Graph c5 = fam("Cn", {{"n", 5}});
  auto pair = evaluate_delta(c5, {}, VertexSet{0});
  CHECK_THROWS_AS(extract_p4_witness(c5, pair), ContractViolation);
}

TEST_CASE("matching and enumeration agree with brute force") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 600; ++i) {
    int n = 1 + static_cast<int>(rng() % 7);
    double p = 0.3 + 0.1 * static_cast<double>(rng() % 5);
    Graph g = oracle::random_graph(rng, n, p);
    bool expected = oracle::has_two_factor(g);
    CHECK(has_two_factor(g) == expected);
    CHECK(oracle::has_barrier(g) == !expected);
    auto barrier = find_barrier(g);
    CHECK(barrier.has_value() == !expected);
    if (barrier) CHECK(oracle::delta(g, barrier->s.bits(), barrier->t.bits()) <= -2);
    if (auto f = find_two_factor(g)) CHECK(is_two_factor(g, *f));
  }
}

TEST_CASE("barrier search is schedule independent") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    Graph g = oracle::random_graph(rng, 9, 0.35);
    auto a = find_barrier(g, Execution::Serial);
    auto b = find_barrier(g, Execution::Parallel);
    REQUIRE(a.has_value() == b.has_value());
    if (a) {
      CHECK(a->s == b->s);
      CHECK(a->t == b->t);
    }
  }
}
