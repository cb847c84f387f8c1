#pragma once

// Explicit path families with pairwise private k-subpaths, the matching and
// skeleton classes used to bound such families from above, a greedy family
// builder, and the greedy lexicographic code used for the triangle condition.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lastsep/core.hpp"
#include "lastsep/predicates.hpp"
#include "lastsep/random.hpp"

namespace lastsep {

// Bipartite layout behind the tuple-permutation families.
//
// Even k: A = {1..n/2}, B = {n/2+1..n} cut into n/k consecutive tuples of
// size k/2; a path alternates a_1, b, a_2, b, ... with the B slots filled by
// the tuples in permuted order.
//
// Odd k: with t = ceil(k/2), A = {1..(t-1)n/k} cut into consecutive
// (t-1)-tuples and B = the rest cut into t-tuples. Block j alternates the j-th
// placed B-tuple with the j-th A-tuple (b, y, b, ..., y, b) and the path
// jumps straight from the last b of one block to the first b of the next. The
// first B-tuple never moves.
struct TupleScheme {
  int n = 0;
  int k = 0;
  std::vector<Vertex> a_side;
  std::vector<std::vector<Vertex>> b_tuples;
  std::size_t fixed_prefix_count = 0;

  bool odd() const { return k % 2 == 1; }
  std::size_t tuple_count() const { return b_tuples.size(); }
};

// Positions in b_tuples, listed in the order the tuples are placed.
using TuplePermutation = std::vector<std::size_t>;

namespace detail {

inline void check_tuple_parameters(int n, int k, bool odd) {
  if (odd ? (k < 3 || k % 2 == 0) : (k <= 2 || k % 2 != 0))
    throw BadParameters(odd ? "odd construction needs odd k >= 3" : "even construction needs even k > 2");
  if (n % k != 0) throw BadParameters(std::to_string(k) + " does not divide " + std::to_string(n));
  if (n / k < 2) throw BadParameters("construction needs n/k >= 2");
}

inline std::vector<std::vector<Vertex>> consecutive_tuples(Vertex first, Vertex last, int size) {
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = first; v <= last; v += size) {
    std::vector<Vertex> tuple(static_cast<std::size_t>(size));
    std::iota(tuple.begin(), tuple.end(), v);
    out.push_back(std::move(tuple));
  }
  return out;
}

inline void check_permutation(const TupleScheme& scheme, const TuplePermutation& perm) {
  if (perm.size() != scheme.tuple_count()) throw BadParameters("tuple permutation has the wrong length");
  std::vector<bool> seen(perm.size(), false);
  for (auto i : perm) {
    if (i >= perm.size() || seen[i]) throw BadParameters("tuple permutation is not a permutation");
    seen[i] = true;
  }
  for (std::size_t i = 0; i < scheme.fixed_prefix_count; ++i)
    if (perm[i] != i) throw BadParameters("tuple permutation moves a fixed tuple");
}

// Vertex sequence for a tuple order, before canonicalization.
inline std::vector<Vertex> scheme_sequence(const TupleScheme& scheme, const TuplePermutation& perm) {
  std::vector<Vertex> seq;
  seq.reserve(static_cast<std::size_t>(scheme.n));
  if (!scheme.odd()) {
    std::size_t a = 0;
    for (auto t : perm)
      for (auto b : scheme.b_tuples[t]) {
        seq.push_back(scheme.a_side[a++]);
        seq.push_back(b);
      }
    return seq;
  }
  const std::size_t gaps = scheme.b_tuples.front().size() - 1;
  for (std::size_t block = 0; block < perm.size(); ++block) {
    const auto& bs = scheme.b_tuples[perm[block]];
    for (std::size_t i = 0; i < bs.size(); ++i) {
      seq.push_back(bs[i]);
      if (i < gaps) seq.push_back(scheme.a_side[block * gaps + i]);
    }
  }
  return seq;
}

}  // namespace detail

inline TupleScheme even_scheme(int n, int k) {
  detail::check_tuple_parameters(n, k, false);
  TupleScheme s{n, k, {}, {}, 0};
  s.a_side.resize(static_cast<std::size_t>(n / 2));
  std::iota(s.a_side.begin(), s.a_side.end(), 1);
  s.b_tuples = detail::consecutive_tuples(n / 2 + 1, n, k / 2);
  return s;
}

inline TupleScheme odd_scheme(int n, int k) {
  detail::check_tuple_parameters(n, k, true);
  const int a = (k / 2) * (n / k);
  TupleScheme s{n, k, {}, {}, 1};
  s.a_side.resize(static_cast<std::size_t>(a));
  std::iota(s.a_side.begin(), s.a_side.end(), 1);
  s.b_tuples = detail::consecutive_tuples(a + 1, n, (k + 1) / 2);
  return s;
}

inline HamiltonPath scheme_path(const TupleScheme& scheme, const TuplePermutation& perm) {
  detail::check_permutation(scheme, perm);
  return HamiltonPath(detail::scheme_sequence(scheme, perm));
}

// Every admissible tuple order, lexicographically.
inline std::vector<TuplePermutation> scheme_permutations(const TupleScheme& scheme) {
  TuplePermutation perm(scheme.tuple_count());
  std::iota(perm.begin(), perm.end(), 0);
  const auto movable = perm.begin() + static_cast<std::ptrdiff_t>(scheme.fixed_prefix_count);
  std::vector<TuplePermutation> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(movable, perm.end()));
  return out;
}

inline PathFamily scheme_family(const TupleScheme& scheme) {
  PathFamily family{scheme.n, PairwiseCondition::private_subpath(scheme.k), {}};
  for (const auto& perm : scheme_permutations(scheme)) family.members.push_back(scheme_path(scheme, perm));
  return family;
}

// (n/k)! paths, k even, k > 2, k | n.
inline PathFamily build_even(int n, int k) { return scheme_family(even_scheme(n, k)); }

// (n/k - 1)! paths, k odd, k >= 3, k | n.
inline PathFamily build_odd(int n, int k) { return scheme_family(odd_scheme(n, k)); }

// A private k-window of the path of `first` with respect to the path of
// `second`. `start` is the 1-based edge position along the canonical path.
struct WindowWitness {
  HamiltonPath path;
  std::size_t start = 1;
  EdgeSet edges;
};

// The window is read off the first tuple slot where the two orders differ.
//
// Even k: the k edges incident to that tuple. Odd k: the block of that tuple
// plus the outgoing jump to the next block's first vertex, unless the second
// order also places the same tuple pair back to back; then the incoming jump
// from the previous (shared) block is used instead, which is never shared.
inline WindowWitness witness_window(const TupleScheme& scheme, const TuplePermutation& first,
                                    const TuplePermutation& second) {
  detail::check_permutation(scheme, first);
  detail::check_permutation(scheme, second);
  const auto diff = std::mismatch(first.begin(), first.end(), second.begin()).first;
  if (diff == first.end()) throw NoDifference("tuple orders are identical");
  const auto slot = static_cast<std::size_t>(diff - first.begin());
  const auto k = static_cast<std::size_t>(scheme.k);

  std::size_t start = 0;  // 1-based, along the uncanonicalized sequence
  if (!scheme.odd()) {
    start = 2 * slot * (k / 2) + 1;
  } else {
    start = slot * k + 1;
    const auto in_second = static_cast<std::size_t>(std::find(second.begin(), second.end(), first[slot]) - second.begin());
    const bool outgoing_shared = in_second + 1 < second.size() && second[in_second + 1] == first[slot + 1];
    if (outgoing_shared) start -= 1;
  }

  const auto seq = detail::scheme_sequence(scheme, first);
  HamiltonPath path(seq);
  if (path.order().front() != seq.front()) start = seq.size() - start - k + 1;
  auto edges = window(path, start, k);
  return {std::move(path), start, std::move(edges)};
}

enum class MatchingParity { Odd, Even };

// Edges at positions 1, 3, 5, ... (Odd) or 2, 4, ... (Even) along the path.
inline EdgeSet odd_edge_matching(const HamiltonPath& p, MatchingParity parity = MatchingParity::Odd) {
  EdgeSet out(p.n());
  for (std::size_t i = parity == MatchingParity::Odd ? 1 : 2; i < p.order().size(); i += 2) out.insert(p.edge_at(i));
  return out;
}

// Edges at positions 1, k+1, 2k+1, ..., n-k+1.
inline EdgeSet skeleton(const HamiltonPath& p, int k) {
  if (k < 2 || p.n() % k != 0) throw BadParameters("skeleton needs k >= 2 dividing n");
  EdgeSet out(p.n());
  for (std::size_t i = 1; i + 1 <= static_cast<std::size_t>(p.n()); i += static_cast<std::size_t>(k))
    out.insert(p.edge_at(i));
  return out;
}

// The fixed edge set {ki+1, ki+2}, i = 0..n/k-1.
inline EdgeSet fixed_skeleton_edges(int n, int k) {
  if (k < 2 || n % k != 0) throw BadParameters("fixed skeleton needs k >= 2 dividing n");
  EdgeSet out(n);
  for (int i = 0; i < n / k; ++i) out.insert(Edge(k * i + 1, k * i + 2));
  return out;
}

// Number of vertex sequences of K_n whose edges at positions 1, k+1, ... are
// exactly fixed_skeleton_edges(n, k). Brute force over all n! orders.
inline std::uint64_t count_skeleton_class(int n, int k) {
  if (n > 10) throw TooLarge("skeleton class enumeration is limited to n <= 10");
  const auto target = fixed_skeleton_edges(n, k);
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 1);
  std::uint64_t count = 0;
  do {
    EdgeSet got(n);
    for (std::size_t i = 0; i + 1 < seq.size(); i += static_cast<std::size_t>(k)) got.insert(Edge(seq[i], seq[i + 1]));
    if (got == target) ++count;
  } while (std::next_permutation(seq.begin(), seq.end()));
  return count;
}

// Keeps each candidate that satisfies `condition` with every kept path.
inline PathFamily greedy_scan(int n, const PairwiseCondition& condition, const std::vector<HamiltonPath>& candidates) {
  require_path_condition(condition, n);
  PathFamily family{n, condition, {}};
  for (const auto& p : candidates) {
    const bool fits = std::all_of(family.members.begin(), family.members.end(),
                                  [&](const HamiltonPath& q) { return satisfies(condition, p, q); });
    if (fits) family.members.push_back(p);
  }
  return family;
}

// Distinct canonical paths in a seed-determined order: every path of K_n
// shuffled when n <= 9, otherwise `sample_size` random permutations.
inline std::vector<HamiltonPath> candidate_paths(int n, std::uint64_t seed, std::size_t sample_size) {
  Rng rng(seed);
  std::vector<HamiltonPath> out;
  if (n <= 9) {
    out = all_paths(n);
    shuffle(std::span(out), rng);
    return out;
  }
  std::vector<HamiltonPath> seen;
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (std::size_t s = 0; s < sample_size; ++s) {
    std::iota(order.begin(), order.end(), 1);
    shuffle(std::span(order), rng);
    out.emplace_back(order);
  }
  // Drop repeats while keeping the sampled order.
  std::vector<std::size_t> idx(out.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return out[a] < out[b]; });
  std::vector<bool> keep(out.size(), true);
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (out[idx[i]] == out[idx[i - 1]]) keep[idx[i]] = false;
  std::vector<HamiltonPath> unique;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (keep[i]) unique.push_back(std::move(out[i]));
  return unique;
}

inline constexpr std::size_t kGreedySampleSize = 50000;

inline PathFamily greedy_family(int n, const PairwiseCondition& condition, std::uint64_t seed,
                                std::size_t sample_size = kGreedySampleSize) {
  if (n < 2) throw BadParameters("greedy_family needs n >= 2");
  require_path_condition(condition, n);
  return greedy_scan(n, condition, candidate_paths(n, seed, sample_size));
}

// Lexicode: scan all n-bit vectors of weight >= min_weight in increasing
// numeric order (vertex 1 is the lowest bit) and keep each one at Hamming
// distance >= d from everything kept so far.
inline CodeFamily gv_family(int n, int d, int min_weight) {
  if (n < 1 || n > 24) throw BadParameters("gv_family supports 1 <= n <= 24");
  if (d < 1 || d > n) throw BadParameters("gv_family needs 1 <= d <= n");
  if (min_weight < 0 || min_weight > n) throw BadParameters("gv_family needs 0 <= min_weight <= n");
  CodeFamily code{n, d, {}};
  std::vector<std::uint64_t> kept;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < end; ++x) {
    if (std::popcount(x) < min_weight) continue;
    const bool far = std::all_of(kept.begin(), kept.end(), [&](std::uint64_t y) { return std::popcount(x ^ y) >= d; });
    if (far) kept.push_back(x);
  }
  for (auto x : kept) code.words.emplace_back(n, x);
  return code;
}

}  // namespace lastsep
