#include <random>

#include "doctest.h"
#include "factorlab/error.hpp"
#include "factorlab/families.hpp"
#include "factorlab/forbidden.hpp"
#include "oracles.hpp"

using namespace factorlab;

namespace {

Graph fam(const std::string& name, FamilyParams p = {}) { return build_family(name, p).graph; }

}  // namespace

TEST_CASE("pattern parsing") {
  CHECK(parse_pattern("P4+3P1").parts() == std::vector<int>{4, 1, 1, 1});
  CHECK(parse_pattern("5P1").parts() == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(parse_pattern("P7+2P1").parts() == std::vector<int>{7, 1, 1});
  CHECK(parse_pattern("2P2+P1").parts() == std::vector<int>{2, 2, 1});
  CHECK(parse_pattern(" P1 + P3 ").to_string() == "P3+P1");
  CHECK(parse_pattern("3P2+P1").to_string() == "3P2+P1");

  auto position = [](const char* text) -> long {
    try {
      parse_pattern(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(position("P0") == 1);
  CHECK(position("P4+") == 3);
  CHECK(position("P4*P1") == 2);
  CHECK(position("Q4") == 0);
  CHECK(position("0P3") == 0);
  CHECK(position("") == 0);
  CHECK(position("P65") >= 0);
}

TEST_CASE("induced linear forests in named graphs") {
  CHECK_FALSE(find_induced(fam("H0"), parse_pattern("P2+3P1")));
  CHECK_FALSE(find_induced(fam("H1"), parse_pattern("P3+2P1")));
  for (const char* r : {"P3+4P1", "P2+5P1", "6P1"}) {
    CHECK_FALSE(find_induced(fam("H5", {{"p", 5}}), parse_pattern(r)));
  }
  CHECK_FALSE(find_induced(fam("H12", {{"p", 4}}), parse_pattern("5P1")));
  CHECK_FALSE(find_induced(fam("H12", {{"p", 4}}), parse_pattern("P4+2P1")));

  Graph p5 = fam("Pn", {{"n", 5}});
  auto e = find_induced(p5, parse_pattern("P3+P1"));
  REQUIRE(e);
  CHECK(is_induced_embedding(p5, *e));
  CHECK(e->to_string() == "P3: 0-1-2; P1: 4");

  for (int n = 2; n <= 6; ++n) CHECK(is_r_free(fam("Kmn", {{"m", n}, {"n", n - 1}}), parse_pattern("P5")));
  CHECK_FALSE(is_r_free(fam("Cn", {{"n", 7}}), parse_pattern("P3+P2")));
  CHECK(is_r_free(fam("Kn", {{"n", 5}}), parse_pattern("2P1")));
}

TEST_CASE("embedding checks") {
  Graph c5 = fam("Cn", {{"n", 5}});
  CHECK(is_induced_embedding(c5, Embedding{{{0, 1, 2}}}));
  CHECK_FALSE(is_induced_embedding(c5, Embedding{{{0, 1, 2, 3, 4}}}));  // chord 4-0
  CHECK_FALSE(is_induced_embedding(c5, Embedding{{{0, 2}}}));           // not adjacent
  CHECK_FALSE(is_induced_embedding(c5, Embedding{{{0}, {0}}}));         // repeated
  CHECK_FALSE(is_induced_embedding(c5, Embedding{{{0}, {1}}}));         // extra edge
}

TEST_CASE("there are 33 linear forests on 5 to 7 vertices") {
  const auto& all = small_linear_forests();
  CHECK(all.size() == 33);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
  }
}

TEST_CASE("backtracking search matches subset enumeration") {
  std::mt19937_64 rng(51);
  const auto& patterns = small_linear_forests();
  for (int i = 0; i < 150; ++i) {
    int n = 5 + static_cast<int>(rng() % 6);
    double p = 0.15 + 0.1 * static_cast<double>(rng() % 6);
    Graph g = oracle::random_graph(rng, n, p);
    for (const auto& r : patterns) {
      auto e = find_induced(g, r);
      CHECK(e.has_value() == oracle::contains_induced(g, r.parts()));
      if (e) CHECK(is_induced_embedding(g, *e));
    }
  }
}

TEST_CASE("freeness is inherited by larger patterns") {
  // Each pair (a, b) has a as an induced subgraph of b.
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"P4+P1", "P4+3P1"}, {"P2+3P1", "P2+5P1"}, {"P3+2P1", "P4+2P1"},
      {"5P1", "6P1"},      {"P3", "P5"},         {"P2+P1", "P4"},
  };
  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) {
    Graph g = oracle::random_graph(rng, 5 + static_cast<int>(rng() % 5), 0.4);
    for (auto [a, b] : pairs) {
      if (is_r_free(g, parse_pattern(a))) CHECK(is_r_free(g, parse_pattern(b)));
    }
  }
}
