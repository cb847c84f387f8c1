#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "lastsep/core.hpp"
#include "lastsep/random.hpp"
#include "oracles.hpp"

using namespace lastsep;

namespace {

EdgeSet set_of(int n, std::initializer_list<std::pair<int, int>> pairs) {
  EdgeSet s(n);
  for (auto [a, b] : pairs) s.insert(Edge(a, b));
  return s;
}

}  // namespace

TEST_CASE("edge index is a bijection onto [0, n(n-1)/2)", "[core]") {
  std::set<std::size_t> seen;
  for (int v = 2; v <= 40; ++v)
    for (int u = 1; u < v; ++u) {
      const auto i = edge_index(Edge(u, v));
      REQUIRE(i < edge_count(v));
      REQUIRE(edge_from_index(i) == Edge(u, v));
      seen.insert(i);
    }
  REQUIRE(seen.size() == edge_count(40));
  REQUIRE(edge_index(Edge(2, 1)) == 0);
}

TEST_CASE("edges are unordered pairs of distinct vertices", "[core]") {
  REQUIRE(Edge(3, 1) == Edge(1, 3));
  REQUIRE_THROWS_AS(Edge(2, 2), BadParameters);
  REQUIRE_THROWS_AS(Edge(0, 2), OutOfRange);
}

TEST_CASE("edges_of lists the n-1 consecutive pairs", "[core]") {
  REQUIRE(edges_of(HamiltonPath({1, 2, 3, 4})) == set_of(4, {{1, 2}, {2, 3}, {3, 4}}));
  REQUIRE(edges_of(HamiltonPath({1, 5, 2, 6, 3, 7, 4, 8})) ==
          set_of(8, {{1, 5}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {4, 7}, {4, 8}}));
  REQUIRE(edges_of(HamiltonPath({2, 1})) == set_of(2, {{1, 2}}));
}

TEST_CASE("canonicalize picks the smaller orientation", "[core]") {
  REQUIRE(std::ranges::equal(canonicalize(std::vector<Vertex>{3, 2, 1}).order(), std::vector<Vertex>{1, 2, 3}));
  REQUIRE(std::ranges::equal(canonicalize(std::vector<Vertex>{1, 2, 3}).order(), std::vector<Vertex>{1, 2, 3}));
  REQUIRE(std::ranges::equal(canonicalize(std::vector<Vertex>{2, 3, 1}).order(), std::vector<Vertex>{1, 3, 2}));
}

TEST_CASE("canonicalize rejects non-permutations", "[core]") {
  REQUIRE_THROWS_AS(canonicalize(std::vector<Vertex>{1, 2, 2}), NotAPermutation);
  REQUIRE_THROWS_AS(canonicalize(std::vector<Vertex>{1, 2, 4}), NotAPermutation);
  REQUIRE_THROWS_AS(canonicalize(std::vector<Vertex>{0, 1}), NotAPermutation);
  REQUIRE_THROWS_AS(canonicalize(std::vector<Vertex>{}), NotAPermutation);
}

TEST_CASE("window returns consecutive edges", "[core]") {
  const HamiltonPath p({1, 5, 2, 6, 3, 7, 4, 8});
  REQUIRE(window(p, 1, 4) == set_of(8, {{1, 5}, {2, 5}, {2, 6}, {3, 6}}));
  REQUIRE(window(HamiltonPath({1, 2, 3, 4}), 3, 1) == set_of(4, {{3, 4}}));
  REQUIRE_THROWS_AS(window(HamiltonPath({1, 2, 3, 4}), 2, 3), OutOfRange);
  REQUIRE_THROWS_AS(window(HamiltonPath({1, 2, 3, 4}), 0, 1), OutOfRange);
}

TEST_CASE("edge set algebra", "[core]") {
  const auto a = set_of(5, {{1, 2}, {2, 3}, {4, 5}});
  const auto b = set_of(5, {{2, 3}, {1, 5}});
  REQUIRE((a & b) == set_of(5, {{2, 3}}));
  REQUIRE((a | b).size() == 4);
  REQUIRE((a - b) == set_of(5, {{1, 2}, {4, 5}}));
  REQUIRE_FALSE(a.disjoint(b));
  REQUIRE((a - b).disjoint(b));
  REQUIRE(set_of(5, {{4, 5}}).subset_of(a));
  REQUIRE_THROWS_AS(a.disjoint(EdgeSet(6)), MismatchedN);
  REQUIRE_THROWS_AS(EdgeSet(4).insert(Edge(1, 5)), OutOfRange);
  REQUIRE(to_string(a) == "{1-2,2-3,4-5}");
}

TEST_CASE("edge sets beyond one machine word", "[core]") {
  // K_30 has 435 edges.
  EdgeSet s(30);
  s.insert(Edge(29, 30));
  s.insert(Edge(1, 2));
  REQUIRE(s.size() == 2);
  REQUIRE(s.contains(Edge(30, 29)));
  REQUIRE(s.edges() == std::vector<Edge>{Edge(1, 2), Edge(29, 30)});
}

TEST_CASE("enumerate_paths yields n!/2 canonical paths in order", "[core]") {
  std::uint64_t factorial = 1;
  for (int n = 2; n <= 7; ++n) {
    factorial *= static_cast<std::uint64_t>(n);
    const auto paths = all_paths(n);
    REQUIRE(paths.size() == factorial / 2);
    REQUIRE(std::is_sorted(paths.begin(), paths.end()));
    REQUIRE(std::adjacent_find(paths.begin(), paths.end()) == paths.end());
    const auto expected = oracle::canonical_paths(n);
    REQUIRE(expected.size() == paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) REQUIRE(std::ranges::equal(paths[i].order(), expected[i]));
  }
  REQUIRE(all_paths(2).size() == 1);
  REQUIRE(all_paths(4).size() == 12);
  REQUIRE(all_paths(6).size() == 360);
}

TEST_CASE("core invariants on random permutations", "[core][property]") {
  Rng rng(20240611);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 14));
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    shuffle(std::span(order), rng);
    const auto p = canonicalize(order);
    REQUIRE(canonicalize(p.order()) == p);

    std::vector<Vertex> reversed(order.rbegin(), order.rend());
    REQUIRE(canonicalize(reversed) == p);
    REQUIRE(edges_of(p).size() == static_cast<std::size_t>(n - 1));

    EdgeSet from_windows(n);
    for (std::size_t i = 1; i < static_cast<std::size_t>(n); ++i) from_windows |= window(p, i, 1);
    REQUIRE(from_windows == edges_of(p));

    oracle::Edges expected = oracle::edges(order);
    std::set<std::pair<int, int>> got;
    for (const auto& e : edges_of(p).edges()) got.insert({e.u, e.v});
    REQUIRE(got == expected);
  }
}
