#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>
#include <vector>

#include "lastsep/constructions.hpp"
#include "lastsep/random.hpp"
#include "oracles.hpp"

using namespace lastsep;

namespace {

std::vector<Vertex> seq(const HamiltonPath& p) { return {p.order().begin(), p.order().end()}; }

EdgeSet set_of(int n, std::initializer_list<std::pair<int, int>> pairs) {
  EdgeSet s(n);
  for (auto [a, b] : pairs) s.insert(Edge(a, b));
  return s;
}

}  // namespace

TEST_CASE("build_even at (8,4)", "[constructions]") {
  const auto family = build_even(8, 4);
  REQUIRE(family.size() == 2);
  REQUIRE(seq(family.members[0]) == std::vector<Vertex>{1, 5, 2, 6, 3, 7, 4, 8});
  REQUIRE(seq(family.members[1]) == std::vector<Vertex>{1, 7, 2, 8, 3, 5, 4, 6});
  REQUIRE(family.condition == PairwiseCondition::private_subpath(4));
}

TEST_CASE("build_even at (12,4) is valid", "[constructions]") {
  const auto family = build_even(12, 4);
  REQUIRE(family.size() == 6);
  REQUIRE(verify_family(family).ok());
}

TEST_CASE("build_odd at (9,3)", "[constructions]") {
  const auto family = build_odd(9, 3);
  REQUIRE(family.size() == 2);
  REQUIRE(seq(family.members[0]) == std::vector<Vertex>{4, 1, 5, 6, 2, 7, 8, 3, 9});
  REQUIRE(seq(family.members[1]) == std::vector<Vertex>{4, 1, 5, 8, 2, 9, 6, 3, 7});
}

TEST_CASE("build_odd at (15,3) is valid", "[constructions]") {
  const auto family = build_odd(15, 3);
  REQUIRE(family.size() == 24);
  REQUIRE(verify_family(family).ok());
}

TEST_CASE("tuple schemes have the stated shape", "[constructions]") {
  const auto even = even_scheme(12, 6);
  REQUIRE(even.a_side.size() == 6);
  REQUIRE(even.b_tuples.size() == 2);
  REQUIRE(even.b_tuples[0] == std::vector<Vertex>{7, 8, 9});
  REQUIRE(even.fixed_prefix_count == 0);

  const auto odd = odd_scheme(15, 5);
  REQUIRE(odd.a_side.size() == 6);  // floor(5/2) * 15/5
  REQUIRE(odd.b_tuples.size() == 3);
  REQUIRE(odd.b_tuples[0] == std::vector<Vertex>{7, 8, 9});
  REQUIRE(odd.fixed_prefix_count == 1);
}

TEST_CASE("construction parameter errors", "[constructions]") {
  REQUIRE_THROWS_AS(build_even(8, 3), BadParameters);
  REQUIRE_THROWS_AS(build_even(10, 4), BadParameters);
  REQUIRE_THROWS_AS(build_even(8, 2), BadParameters);
  REQUIRE_THROWS_AS(build_even(4, 4), BadParameters);
  REQUIRE_THROWS_AS(build_odd(8, 3), BadParameters);
  REQUIRE_THROWS_AS(build_odd(8, 4), BadParameters);
  REQUIRE_THROWS_AS(build_odd(5, 5), BadParameters);
}

TEST_CASE("family sizes are (n/k)! and (n/k-1)!", "[constructions]") {
  REQUIRE(build_even(16, 4).size() == 24);
  REQUIRE(build_even(12, 6).size() == 2);
  REQUIRE(build_odd(15, 5).size() == 2);
  REQUIRE(build_odd(25, 5).size() == 24);
  REQUIRE(build_odd(21, 3).size() == 720);
}

TEST_CASE("witness_window examples", "[constructions]") {
  const auto even = even_scheme(8, 4);
  const auto w = witness_window(even, {0, 1}, {1, 0});
  REQUIRE(w.start == 1);
  REQUIRE(w.edges == set_of(8, {{1, 5}, {2, 5}, {2, 6}, {3, 6}}));

  const auto odd = odd_scheme(9, 3);
  const auto v = witness_window(odd, {0, 1, 2}, {0, 2, 1});
  REQUIRE(v.edges == set_of(9, {{2, 6}, {2, 7}, {7, 8}}));
  REQUIRE(v.start == 4);

  REQUIRE_THROWS_AS(witness_window(even, {0, 1}, {0, 1}), NoDifference);
  REQUIRE_THROWS_AS(witness_window(odd, {1, 0, 2}, {0, 2, 1}), BadParameters);
}

TEST_CASE("odd-k witness falls back to the incoming jump when the outgoing one is shared", "[constructions]") {
  // Tuples 1 and 2 are adjacent in both orders, so the edge from the end of
  // tuple 1 to the start of tuple 2 lies in both paths.
  const auto odd = odd_scheme(12, 3);
  const TuplePermutation first{0, 1, 2, 3};
  const TuplePermutation second{0, 3, 1, 2};
  const auto w = witness_window(odd, first, second);
  const auto other = scheme_path(odd, second);
  REQUIRE(w.edges.subset_of(edges_of(w.path)));
  REQUIRE(w.edges.disjoint(edges_of(other)));
  REQUIRE(w.edges == window(w.path, w.start, 3));
}

TEST_CASE("witness windows are private for every ordered pair", "[constructions]") {
  for (auto [n, k] : {std::pair{8, 4}, std::pair{12, 4}, std::pair{9, 3}, std::pair{12, 3}, std::pair{15, 3},
                      std::pair{15, 5}}) {
    const auto scheme = k % 2 ? odd_scheme(n, k) : even_scheme(n, k);
    const auto perms = scheme_permutations(scheme);
    for (const auto& a : perms)
      for (const auto& b : perms) {
        if (a == b) continue;
        const auto w = witness_window(scheme, a, b);
        REQUIRE(w.path == scheme_path(scheme, a));
        REQUIRE(w.edges.size() == static_cast<std::size_t>(k));
        REQUIRE(w.edges == window(w.path, w.start, static_cast<std::size_t>(k)));
        REQUIRE(w.edges.disjoint(edges_of(scheme_path(scheme, b))));
      }
  }
}

TEST_CASE("odd_edge_matching", "[constructions]") {
  REQUIRE(odd_edge_matching(HamiltonPath({1, 2, 3, 4, 5, 6})) == set_of(6, {{1, 2}, {3, 4}, {5, 6}}));
  REQUIRE(odd_edge_matching(HamiltonPath({1, 5, 2, 6, 3, 7, 4, 8})) == set_of(8, {{1, 5}, {2, 6}, {3, 7}, {4, 8}}));
  const HamiltonPath five({1, 2, 3, 4, 5});
  REQUIRE(odd_edge_matching(five) == set_of(5, {{1, 2}, {3, 4}}));
  REQUIRE(odd_edge_matching(five, MatchingParity::Even) == set_of(5, {{2, 3}, {4, 5}}));
}

TEST_CASE("distinct odd-edge matchings count the (near-)perfect matchings", "[constructions][exhaustive]") {
  for (int n = 2; n <= 8; ++n) {
    std::set<EdgeSet> distinct;
    // Reversal swaps the two parities when n is odd.
    for_each_path(n, [&](const HamiltonPath& p) {
      distinct.insert(odd_edge_matching(p));
      if (n % 2) distinct.insert(odd_edge_matching(p, MatchingParity::Even));
    });
    REQUIRE(distinct.size() == oracle::count_matchings(n));
  }
}

TEST_CASE("skeleton", "[constructions]") {
  REQUIRE(skeleton(HamiltonPath({1, 5, 2, 6, 3, 7, 4, 8}), 4) == set_of(8, {{1, 5}, {3, 7}}));
  REQUIRE(skeleton(HamiltonPath({1, 2, 3, 4}), 4) == set_of(4, {{1, 2}}));
  REQUIRE_THROWS_AS(skeleton(HamiltonPath({1, 2, 3, 4, 5}), 4), BadParameters);
}

TEST_CASE("skeleton edges are vertex-disjoint", "[constructions][property]") {
  Rng rng(1000);
  std::vector<Vertex> order(12);
  for (int trial = 0; trial < 1000; ++trial) {
    std::iota(order.begin(), order.end(), 1);
    shuffle(std::span(order), rng);
    const auto sk = skeleton(HamiltonPath(order), 4);
    REQUIRE(sk.size() == 3);
    std::set<Vertex> ends;
    for (const auto& e : sk.edges()) {
      ends.insert(e.u);
      ends.insert(e.v);
    }
    REQUIRE(ends.size() == 6);
  }
}

TEST_CASE("skeleton class enumeration", "[constructions]") {
  // Frozen from an independent permutation count.
  REQUIRE(count_skeleton_class(4, 2) == 8);
  REQUIRE(count_skeleton_class(6, 3) == 16);
  REQUIRE(count_skeleton_class(8, 4) == 192);
}

TEST_CASE("greedy_family output is valid and reproducible", "[constructions]") {
  const auto a = greedy_family(4, PairwiseCondition::private_subpath(2), 0);
  REQUIRE(a.size() >= 1);
  REQUIRE(verify_family(a).ok());
  REQUIRE(greedy_family(4, PairwiseCondition::private_subpath(2), 0).members == a.members);

  const auto b = greedy_family(5, PairwiseCondition::degree4_union(), 0);
  REQUIRE(verify_family(b).ok());

  const auto c = greedy_family(11, PairwiseCondition::private_subpath(3), 5, 2000);
  REQUIRE(verify_family(c).ok());
  REQUIRE(greedy_family(11, PairwiseCondition::private_subpath(3), 5, 2000).members == c.members);
}

TEST_CASE("gv_family", "[constructions]") {
  REQUIRE(gv_family(4, 1, 0).size() == 16);
  // Lexicode sizes frozen from an independent scan.
  REQUIRE(gv_family(10, 3, 0).size() == 64);
  const auto code = gv_family(12, 7, 3);
  REQUIRE(code.size() == 4);
  REQUIRE(verify_triangle_family(code).ok());
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j) REQUIRE(hamming_distance(code.words[i], code.words[j]) >= 7);
  REQUIRE_THROWS_AS(gv_family(10, 0, 0), BadParameters);
  REQUIRE_THROWS_AS(gv_family(10, 11, 0), BadParameters);
  REQUIRE_THROWS_AS(gv_family(10, 3, -1), BadParameters);
}
