#pragma once

// Exact optima over Hamilton-path families by maximum clique search on the
// compatibility graph (vertices = canonical paths, edges = pairs satisfying
// the condition), and randomized greedy lower bounds beyond that range.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lastsep/constructions.hpp"
#include "lastsep/core.hpp"
#include "lastsep/parallel.hpp"
#include "lastsep/predicates.hpp"

namespace lastsep {

// Undirected simple graph with one bitset row per vertex.
class BitGraph {
 public:
  BitGraph() = default;
  explicit BitGraph(std::size_t vertices)
      : m_(vertices), words_((vertices + 63) / 64), bits_(m_ * words_, 0) {}

  std::size_t size() const { return m_; }
  std::size_t words_per_row() const { return words_; }

  void add_edge(std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("self loops are not allowed");
    set(i, j);
    set(j, i);
  }

  // Sets only the (i, j) bit; callers must mirror it.
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }

  bool adjacent(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U; }

  std::span<const std::uint64_t> row(std::size_t i) const { return {bits_.data() + i * words_, words_}; }

  std::size_t degree(std::size_t i) const {
    std::size_t d = 0;
    for (auto w : row(i)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  bool symmetric_without_loops() const {
    for (std::size_t i = 0; i < m_; ++i) {
      if (adjacent(i, i)) return false;
      for (std::size_t j = i + 1; j < m_; ++j)
        if (adjacent(i, j) != adjacent(j, i)) return false;
    }
    return true;
  }

 private:
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct CliqueOptions {
  std::chrono::duration<double> time_budget = std::chrono::seconds(300);
  unsigned workers = 0;
};

struct CliqueResult {
  std::vector<std::size_t> clique;  // sorted vertex indices
  std::uint64_t nodes = 0;
  bool exhaustive = true;
  std::chrono::duration<double> wall_time{0};
};

namespace detail {

// Degeneracy order: repeatedly peel a minimum-degree vertex (lowest index on
// ties); the last vertex peeled comes first.
inline std::vector<std::size_t> degeneracy_order(const BitGraph& g) {
  const auto m = g.size();
  std::vector<std::size_t> degree(m);
  for (std::size_t i = 0; i < m; ++i) degree[i] = g.degree(i);
  std::vector<bool> removed(m, false);
  std::vector<std::size_t> peeled;
  peeled.reserve(m);
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t best = m;
    for (std::size_t i = 0; i < m; ++i)
      if (!removed[i] && (best == m || degree[i] < degree[best])) best = i;
    removed[best] = true;
    peeled.push_back(best);
    const auto row = g.row(best);
    for (std::size_t w = 0; w < row.size(); ++w) {
      auto bits = row[w];
      while (bits) {
        const auto j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (!removed[j]) --degree[j];
        bits &= bits - 1;
      }
    }
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

inline BitGraph relabel(const BitGraph& g, const std::vector<std::size_t>& order) {
  const auto m = g.size();
  std::vector<std::size_t> rank(m);
  for (std::size_t i = 0; i < m; ++i) rank[order[i]] = i;
  BitGraph out(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = g.row(order[i]);
    for (std::size_t w = 0; w < row.size(); ++w) {
      auto bits = row[w];
      while (bits) {
        out.set(i, rank[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))]);
        bits &= bits - 1;
      }
    }
  }
  return out;
}

using Bits = std::vector<std::uint64_t>;

inline bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

// Bitset branch and bound with greedy colouring bounds.
//
// The root is split into one subtree per branching vertex; workers pull
// subtrees from a shared counter. Inside a subtree a branch is cut when its
// colour bound cannot beat max(subtree best, global best - 1). A branch that
// holds a clique as large as the final optimum is therefore never cut, and
// the depth-first order depends only on the candidate sets, so the first
// maximum clique of the lowest-numbered subtree that holds one is the same
// for every schedule and worker count.
class CliqueSearch {
 public:
  CliqueSearch(const BitGraph& g, const CliqueOptions& options)
      : g_(g), words_(g.words_per_row()), options_(options) {}

  CliqueResult run() {
    const auto started = std::chrono::steady_clock::now();
    deadline_ = started + std::chrono::duration_cast<std::chrono::steady_clock::duration>(options_.time_budget);
    CliqueResult result;
    const auto m = g_.size();
    if (m == 0) return result;

    Bits all(words_, 0);
    for (std::size_t v = 0; v < m; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<std::size_t> root_order;
    std::vector<std::size_t> root_colour;
    colour_sort(all, root_order, root_colour);
    std::vector<std::size_t> rank(m);
    for (std::size_t i = 0; i < m; ++i) rank[root_order[i]] = i;

    subtree_best_.assign(m, 0);
    subtree_clique_.assign(m, {});
    parallel_for(m, options_.workers, [&](std::size_t job) {
      if (stop_.load(std::memory_order_relaxed)) return;
      const auto pos = m - 1 - job;
      const auto v = root_order[pos];
      const auto global = best_.load(std::memory_order_relaxed);
      if (root_colour[pos] < global) return;
      Bits candidates(words_, 0);
      const auto row = g_.row(v);
      for (std::size_t w = 0; w < words_; ++w) {
        auto bits = row[w];
        while (bits) {
          const auto u = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          if (rank[u] < pos) candidates[w] |= std::uint64_t{1} << (u % 64);
          bits &= bits - 1;
        }
      }
      Worker worker{job, {v}, 0, {}, 0, {}};
      if (!any(candidates)) {
        record(worker);
      } else {
        expand(worker, candidates);
      }
      nodes_.fetch_add(worker.nodes + 1, std::memory_order_relaxed);
    });

    std::size_t winner = m;
    for (std::size_t j = 0; j < m; ++j)
      if (subtree_best_[j] > 0 && (winner == m || subtree_best_[j] > subtree_best_[winner])) winner = j;
    if (winner != m) result.clique = subtree_clique_[winner];
    std::sort(result.clique.begin(), result.clique.end());
    result.nodes = nodes_.load();
    result.exhaustive = !stop_.load();
    result.wall_time = std::chrono::steady_clock::now() - started;
    return result;
  }

 private:
  struct Worker {
    std::size_t job;
    std::vector<std::size_t> current;
    std::size_t best;
    std::vector<std::size_t> clique;
    std::uint64_t nodes;
    std::deque<Bits> scratch;  // stable references while growing
  };

  // Greedy sequential colouring of `p` in index order. Outputs vertices by
  // non-decreasing colour; colours start at 1.
  void colour_sort(const Bits& p, std::vector<std::size_t>& order, std::vector<std::size_t>& colour) const {
    order.clear();
    colour.clear();
    Bits uncoloured = p;
    Bits cls(words_);
    std::size_t c = 0;
    while (any(uncoloured)) {
      ++c;
      cls = uncoloured;
      for (std::size_t w = 0; w < words_; ++w) {
        while (cls[w]) {
          const auto v = w * 64 + static_cast<std::size_t>(std::countr_zero(cls[w]));
          order.push_back(v);
          colour.push_back(c);
          uncoloured[w] &= ~(std::uint64_t{1} << (v % 64));
          const auto row = g_.row(v);
          for (std::size_t x = w; x < words_; ++x) cls[x] &= ~row[x];
          cls[w] &= ~(std::uint64_t{1} << (v % 64));
        }
      }
    }
  }

  std::size_t threshold(const Worker& w) const {
    const auto global = best_.load(std::memory_order_relaxed);
    return std::max(w.best, global == 0 ? 0 : global - 1);
  }

  void record(Worker& w) {
    if (w.current.size() <= w.best) return;
    w.best = w.current.size();
    w.clique = w.current;
    subtree_best_[w.job] = w.best;
    subtree_clique_[w.job] = w.clique;
    auto seen = best_.load(std::memory_order_relaxed);
    while (seen < w.best && !best_.compare_exchange_weak(seen, w.best, std::memory_order_relaxed)) {
    }
  }

  bool out_of_time(Worker& w) {
    if (stop_.load(std::memory_order_relaxed)) return true;
    if ((w.nodes & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline_) {
      stop_.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

  void expand(Worker& w, Bits& p) {
    ++w.nodes;
    if (out_of_time(w)) return;
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    colour_sort(p, order, colour);
    const auto depth = w.current.size();
    if (w.scratch.size() <= depth) w.scratch.resize(depth + 1, Bits(words_));
    for (std::size_t i = order.size(); i-- > 0;) {
      if (w.current.size() + colour[i] <= threshold(w)) return;
      const auto v = order[i];
      Bits& next = w.scratch[depth];
      const auto row = g_.row(v);
      for (std::size_t x = 0; x < words_; ++x) next[x] = p[x] & row[x];
      w.current.push_back(v);
      if (!any(next)) {
        record(w);
      } else {
        expand(w, next);
        if (stop_.load(std::memory_order_relaxed)) {
          w.current.pop_back();
          return;
        }
      }
      w.current.pop_back();
      p[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  const BitGraph& g_;
  std::size_t words_;
  CliqueOptions options_;
  std::chrono::steady_clock::time_point deadline_;
  std::atomic<std::size_t> best_{0};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
  std::vector<std::size_t> subtree_best_;
  std::vector<std::vector<std::size_t>> subtree_clique_;
};

}  // namespace detail

inline CliqueResult max_clique(const BitGraph& g, const CliqueOptions& options = {}) {
  const auto order = detail::degeneracy_order(g);
  const auto relabelled = detail::relabel(g, order);
  auto result = detail::CliqueSearch(relabelled, options).run();
  for (auto& v : result.clique) v = order[v];
  std::sort(result.clique.begin(), result.clique.end());
  return result;
}

// Largest n for which the compatibility graph is built (8!/2 = 20160 paths).
inline constexpr int kMaxSearchN = 8;

struct CompatibilityGraph {
  int n = 0;
  PairwiseCondition condition;
  std::vector<HamiltonPath> vertex_labels;  // lexicographic canonical order
  BitGraph adjacency;
};

inline std::uint64_t canonical_path_count(int n) {
  std::uint64_t f = 1;
  for (int i = 3; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

inline void require_search_size(int n) {
  if (n < 2) throw BadParameters("exact search needs n >= 2");
  if (n > kMaxSearchN)
    throw TooLarge("compatibility graph for n=" + std::to_string(n) + " would have " +
                   std::to_string(canonical_path_count(n)) + " vertices (limit n <= " +
                   std::to_string(kMaxSearchN) + ")");
}

inline CompatibilityGraph build_graph(int n, const PairwiseCondition& condition, unsigned workers = 0) {
  require_search_size(n);
  require_path_condition(condition, n);
  CompatibilityGraph g{n, condition, all_paths(n), {}};
  const auto m = g.vertex_labels.size();
  g.adjacency = BitGraph(m);
  // Each worker writes only the upper triangle of its own row.
  parallel_for(m, workers, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < m; ++j)
      if (satisfies(condition, g.vertex_labels[i], g.vertex_labels[j])) g.adjacency.set(i, j);
  });
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (g.adjacency.adjacent(i, j)) g.adjacency.set(j, i);
  return g;
}

struct SearchResult {
  std::size_t optimum = 0;
  PathFamily witness;
  std::uint64_t nodes = 0;
  std::chrono::duration<double> wall_time{0};
  bool exhaustive = false;
};

using SearchOptions = CliqueOptions;

inline SearchResult max_clique(const CompatibilityGraph& g, const SearchOptions& options = {}) {
  const auto found = max_clique(g.adjacency, options);
  SearchResult r;
  r.optimum = found.clique.size();
  r.witness = PathFamily{g.n, g.condition, {}};
  for (auto v : found.clique) r.witness.members.push_back(g.vertex_labels[v]);
  r.nodes = found.nodes;
  r.wall_time = found.wall_time;
  r.exhaustive = found.exhaustive;
  if (!verify_family(r.witness).ok()) throw std::logic_error("clique witness fails its own condition");
  return r;
}

inline SearchResult exact_search(int n, const PairwiseCondition& condition, const SearchOptions& options = {}) {
  const auto started = std::chrono::steady_clock::now();
  auto result = max_clique(build_graph(n, condition, options.workers), options);
  result.wall_time = std::chrono::steady_clock::now() - started;
  return result;
}

// M(n,k): largest family with a private k-subpath between every two members.
inline SearchResult exact_M(int n, int k, const SearchOptions& options = {}) {
  return exact_search(n, PairwiseCondition::private_subpath(k), options);
}

// L(n,k): largest family with a private k-matching between every two members.
inline SearchResult exact_L(int n, int k, const SearchOptions& options = {}) {
  return exact_search(n, PairwiseCondition::private_matching(k), options);
}

// Best of `restarts` greedy scans, restart r using seed + r. Never exhaustive.
inline SearchResult greedy_lower(int n, const PairwiseCondition& condition, int restarts, std::uint64_t seed,
                                 std::size_t sample_size = kGreedySampleSize) {
  if (restarts < 1) throw BadParameters("greedy_lower needs restarts >= 1");
  const auto started = std::chrono::steady_clock::now();
  SearchResult best;
  best.witness = PathFamily{n, condition, {}};
  for (int r = 0; r < restarts; ++r) {
    auto family = greedy_family(n, condition, seed + static_cast<std::uint64_t>(r), sample_size);
    best.nodes += family.size();
    if (family.size() > best.optimum) {
      best.optimum = family.size();
      best.witness = std::move(family);
    }
  }
  if (!verify_family(best.witness).ok()) throw std::logic_error("greedy witness fails its own condition");
  best.exhaustive = false;
  best.wall_time = std::chrono::steady_clock::now() - started;
  return best;
}

}  // namespace lastsep
