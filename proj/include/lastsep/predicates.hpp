#pragma once

// Pairwise separation conditions between Hamilton paths (and between vertex
// subsets for the triangle condition), plus family-level verification.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lastsep/core.hpp"
#include "lastsep/parallel.hpp"

namespace lastsep {

enum class ConditionKind {
  PrivateSubpath,
  Degree4Union,
  PrivateMatching,
  PrivateTrianglePair,
  PrivateSubgraphPath,
};

struct PairwiseCondition {
  ConditionKind kind = ConditionKind::PrivateSubpath;
  int k = 1;  // ignored by Degree4Union and PrivateTrianglePair

  static PairwiseCondition private_subpath(int k) { return {ConditionKind::PrivateSubpath, k}; }
  static PairwiseCondition degree4_union() { return {ConditionKind::Degree4Union, 0}; }
  static PairwiseCondition private_matching(int k) { return {ConditionKind::PrivateMatching, k}; }
  static PairwiseCondition private_triangle() { return {ConditionKind::PrivateTrianglePair, 0}; }
  static PairwiseCondition private_subgraph_path(int k) { return {ConditionKind::PrivateSubgraphPath, k}; }

  bool uses_k() const {
    return kind != ConditionKind::Degree4Union && kind != ConditionKind::PrivateTrianglePair;
  }

  friend bool operator==(const PairwiseCondition& a, const PairwiseCondition& b) {
    return a.kind == b.kind && (!a.uses_k() || a.k == b.k);
  }
};

inline std::string_view condition_name(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::PrivateSubpath: return "private-subpath";
    case ConditionKind::Degree4Union: return "degree4-union";
    case ConditionKind::PrivateMatching: return "private-matching";
    case ConditionKind::PrivateTrianglePair: return "private-triangle";
    case ConditionKind::PrivateSubgraphPath: return "private-subgraph-path";
  }
  return "unknown";
}

inline ConditionKind parse_condition_kind(std::string_view name) {
  for (auto kind : {ConditionKind::PrivateSubpath, ConditionKind::Degree4Union, ConditionKind::PrivateMatching,
                    ConditionKind::PrivateTrianglePair, ConditionKind::PrivateSubgraphPath})
    if (condition_name(kind) == name) return kind;
  throw BadParameters("unknown condition '" + std::string(name) + "'");
}

inline std::string to_string(const PairwiseCondition& c) {
  std::string out(condition_name(c.kind));
  if (c.uses_k()) out += "(" + std::to_string(c.k) + ")";
  return out;
}

// Subset of [n] with its characteristic vector; bit i-1 stands for vertex i.
class VertexSubset {
 public:
  VertexSubset() = default;
  VertexSubset(int n, std::uint64_t bits) : n_(n), bits_(bits) {
    if (n < 0 || n > 64) throw BadParameters("vertex subsets support n <= 64");
    if (n < 64 && (bits >> n) != 0) throw OutOfRange("subset has members outside [n]");
  }
  VertexSubset(int n, std::initializer_list<Vertex> members) : VertexSubset(n, 0) {
    for (auto v : members) insert(v);
  }

  void insert(Vertex v) {
    if (v < 1 || v > n_) throw OutOfRange("vertex " + std::to_string(v) + " outside [n]");
    bits_ |= std::uint64_t{1} << (v - 1);
  }
  bool contains(Vertex v) const { return v >= 1 && v <= n_ && ((bits_ >> (v - 1)) & 1U); }

  int n() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }

  // Characteristic vector as n characters, vertex 1 first.
  std::string characteristic() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
      if ((bits_ >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

inline int hamming_distance(const VertexSubset& a, const VertexSubset& b) {
  return std::popcount(a.bits() ^ b.bits());
}

namespace detail {

inline void same_n(const HamiltonPath& p, const HamiltonPath& q) {
  if (p.n() != q.n())
    throw MismatchedN("paths over K_" + std::to_string(p.n()) + " and K_" + std::to_string(q.n()));
}

// Longest run of consecutive edges of p that are absent from q.
inline int longest_private_run(const HamiltonPath& p, const HamiltonPath& q) {
  int best = 0;
  int run = 0;
  for (std::size_t i = 1; i < p.order().size(); ++i) {
    if (q.has_edge(p[i - 1], p[i])) {
      run = 0;
    } else {
      best = std::max(best, ++run);
    }
  }
  return best;
}

// Maximum matching among the edges of p absent from q. Those edges form
// vertex-disjoint runs along p, and a run of r edges carries ceil(r/2).
inline int private_matching_size(const HamiltonPath& p, const HamiltonPath& q) {
  int total = 0;
  int run = 0;
  for (std::size_t i = 1; i < p.order().size(); ++i) {
    if (q.has_edge(p[i - 1], p[i])) {
      total += (run + 1) / 2;
      run = 0;
    } else {
      ++run;
    }
  }
  return total + (run + 1) / 2;
}

// Simple path with `remaining` more edges from `v` in the graph `adj`.
inline bool extend_path(const std::vector<std::vector<Vertex>>& adj, Vertex v, int remaining,
                        std::vector<bool>& visited) {
  if (remaining == 0) return true;
  for (auto w : adj[static_cast<std::size_t>(v)]) {
    if (visited[static_cast<std::size_t>(w)]) continue;
    visited[static_cast<std::size_t>(w)] = true;
    const bool found = extend_path(adj, w, remaining - 1, visited);
    visited[static_cast<std::size_t>(w)] = false;
    if (found) return true;
  }
  return false;
}

inline bool has_simple_path(const EdgeSet& g, int k) {
  const int n = g.ambient_n();
  if (k < 1) return true;
  if (static_cast<std::size_t>(k) > g.size() || k > n - 1) return false;
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n) + 1);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  for (Vertex v = 1; v <= n; ++v) {
    if (adj[static_cast<std::size_t>(v)].empty()) continue;
    visited[static_cast<std::size_t>(v)] = true;
    const bool found = extend_path(adj, v, k, visited);
    visited[static_cast<std::size_t>(v)] = false;
    if (found) return true;
  }
  return false;
}

}  // namespace detail

// k consecutive edges of one path, none of which lies in the other path.
inline bool private_subpath(const HamiltonPath& p, const HamiltonPath& q, int k) {
  detail::same_n(p, q);
  if (k < 1 || k > p.n() - 1) throw BadParameters("private_subpath needs 1 <= k <= n-1");
  return detail::longest_private_run(p, q) >= k || detail::longest_private_run(q, p) >= k;
}

inline bool degree4_union(const HamiltonPath& p, const HamiltonPath& q) {
  detail::same_n(p, q);
  for (Vertex v = 1; v <= p.n(); ++v) {
    if (p.degree(v) != 2 || q.degree(v) != 2) continue;
    // Degree 4 in the union needs both q-edges at v to be new.
    const auto pos = static_cast<std::size_t>(q.position(v));
    if (!p.has_edge(v, q[pos - 1]) && !p.has_edge(v, q[pos + 1])) return true;
  }
  return false;
}

// Diagnostic: a degree-4 vertex in the union forces a private 2-subpath.
inline bool degree4_implies_private2(const HamiltonPath& p, const HamiltonPath& q) {
  return !degree4_union(p, q) || private_subpath(p, q, 2);
}

// k vertex-disjoint edges of one path, none of which lies in the other path.
inline bool private_matching(const HamiltonPath& p, const HamiltonPath& q, int k) {
  detail::same_n(p, q);
  if (k < 1 || k > p.n() / 2) throw BadParameters("private_matching needs 1 <= k <= n/2");
  return detail::private_matching_size(p, q) >= k || detail::private_matching_size(q, p) >= k;
}

// Triangle inside the clique on S1 using at most one vertex of S2 (so no
// triangle edge lies inside S2), or the same with the roles swapped.
inline bool private_triangle(const VertexSubset& s1, const VertexSubset& s2) {
  const auto one_way = [](const VertexSubset& a, const VertexSubset& b) {
    return a.size() >= 3 && std::popcount(a.bits() & ~b.bits()) >= 2;
  };
  return one_way(s1, s2) || one_way(s2, s1);
}

// A simple path of k edges in G1 \ G2 or in G2 \ G1. Exponential in the
// worst case; meant for n up to about 16.
inline bool private_subgraph_path(const EdgeSet& g1, const EdgeSet& g2, int k) {
  if (g1.ambient_n() != g2.ambient_n()) throw MismatchedN("edge sets over different vertex counts");
  if (k < 1) throw BadParameters("private_subgraph_path needs k >= 1");
  return detail::has_simple_path(g1 - g2, k) || detail::has_simple_path(g2 - g1, k);
}

// Throws BadParameters if `c` cannot be evaluated on Hamilton paths of K_n.
inline void require_path_condition(const PairwiseCondition& c, int n) {
  switch (c.kind) {
    case ConditionKind::PrivateSubpath:
      if (c.k < 1 || c.k > n - 1)
        throw BadParameters("private-subpath needs 1 <= k <= n-1 (k=" + std::to_string(c.k) + ", n=" +
                            std::to_string(n) + ")");
      break;
    case ConditionKind::PrivateMatching:
      if (c.k < 1 || c.k > n / 2)
        throw BadParameters("private-matching needs 1 <= k <= n/2 (k=" + std::to_string(c.k) + ", n=" +
                            std::to_string(n) + ")");
      break;
    case ConditionKind::PrivateSubgraphPath:
      if (c.k < 1) throw BadParameters("private-subgraph-path needs k >= 1");
      break;
    case ConditionKind::Degree4Union:
      break;
    case ConditionKind::PrivateTrianglePair:
      throw BadParameters("private-triangle applies to vertex subsets, not Hamilton paths");
  }
}

inline bool satisfies(const PairwiseCondition& c, const HamiltonPath& p, const HamiltonPath& q) {
  switch (c.kind) {
    case ConditionKind::PrivateSubpath: return private_subpath(p, q, c.k);
    case ConditionKind::Degree4Union: return degree4_union(p, q);
    case ConditionKind::PrivateMatching: return private_matching(p, q, c.k);
    case ConditionKind::PrivateSubgraphPath: return private_subgraph_path(edges_of(p), edges_of(q), c.k);
    case ConditionKind::PrivateTrianglePair: break;
  }
  throw BadParameters("private-triangle applies to vertex subsets, not Hamilton paths");
}

struct PathFamily {
  int n = 0;
  PairwiseCondition condition;
  std::vector<HamiltonPath> members;

  std::size_t size() const { return members.size(); }
};

// Throws DuplicateMember / MismatchedN unless members are distinct paths of K_n.
inline void require_well_formed(const PathFamily& family) {
  std::vector<HamiltonPath> sorted = family.members;
  for (const auto& p : sorted)
    if (p.n() != family.n) throw MismatchedN("member " + to_string(p) + " is not a path of K_" + std::to_string(family.n));
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw DuplicateMember("path " + to_string(*dup) + " appears twice");
}

// Pairs (i, j), i < j, of members failing the condition, in lexicographic order.
struct ViolationReport {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  bool ok() const { return pairs.empty(); }
};

namespace detail {

template <typename T, typename Pred>
ViolationReport pairwise_violations(const std::vector<T>& items, Pred&& holds, unsigned workers) {
  const auto m = items.size();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rows(m);
  parallel_for(m, workers, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < m; ++j)
      if (!holds(items[i], items[j])) rows[i].emplace_back(i, j);
  });
  ViolationReport report;
  for (auto& row : rows) report.pairs.insert(report.pairs.end(), row.begin(), row.end());
  return report;
}

}  // namespace detail

inline ViolationReport verify_family(const PathFamily& family, unsigned workers = 1) {
  require_path_condition(family.condition, family.n);
  return detail::pairwise_violations(
      family.members, [&](const HamiltonPath& p, const HamiltonPath& q) { return satisfies(family.condition, p, q); },
      workers);
}

// Family of vertex subsets for the private-triangle condition, with the
// minimum pairwise Hamming distance it was built for.
struct CodeFamily {
  int n = 0;
  int min_distance = 1;
  std::vector<VertexSubset> words;

  std::size_t size() const { return words.size(); }
};

inline ViolationReport verify_triangle_family(const CodeFamily& family, unsigned workers = 1) {
  return detail::pairwise_violations(family.words, private_triangle, workers);
}

}  // namespace lastsep
