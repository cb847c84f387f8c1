#pragma once

// Vertices, edges, Hamilton paths and edge sets over the complete graph K_n.
//
// Vertices are 1-based labels in [1, n]. A Hamilton path is stored in its
// canonical orientation: the lexicographically smaller of the vertex sequence
// and its reversal. Edge sets are bitsets keyed by a triangular edge index
// that does not depend on n, so sets over different ambient sizes agree on
// the bit position of every shared edge.

#include <algorithm>
#include <bit>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lastsep {

using Vertex = int;

// Error hierarchy. Each failure mode named by the operations has its own type
// so callers (and the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAPermutation : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class MismatchedN : public Error {
 public:
  using Error::Error;
};

class BadParameters : public Error {
 public:
  using Error::Error;
};

class NoDifference : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class DuplicateMember : public Error {
 public:
  using Error::Error;
};

// Undirected edge {u, v} with u < v.
struct Edge {
  Vertex u = 1;
  Vertex v = 2;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw BadParameters("edge endpoints must be distinct");
    if (u < 1) throw OutOfRange("vertex labels start at 1");
  }

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Index of {u, v}, u < v: (v-1)(v-2)/2 + (u-1). Edges of K_n occupy
// indices [0, n(n-1)/2).
inline std::size_t edge_index(const Edge& e) {
  const auto v = static_cast<std::size_t>(e.v);
  return (v - 1) * (v - 2) / 2 + static_cast<std::size_t>(e.u - 1);
}

inline Edge edge_from_index(std::size_t index) {
  // Largest v with (v-1)(v-2)/2 <= index.
  auto v = static_cast<std::size_t>((3.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
  while ((v - 1) * (v - 2) / 2 > index) --v;
  while (v * (v - 1) / 2 <= index) ++v;
  const std::size_t u = index - (v - 1) * (v - 2) / 2 + 1;
  return Edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
}

inline std::size_t edge_count(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

inline std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

// Set of edges of K_n as a bitset over edge_index.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int ambient_n) : n_(ambient_n), words_((edge_count(ambient_n) + 63) / 64, 0) {}

  EdgeSet(int ambient_n, std::initializer_list<Edge> edges) : EdgeSet(ambient_n) {
    for (const auto& e : edges) insert(e);
  }

  int ambient_n() const { return n_; }

  void insert(const Edge& e) {
    check(e);
    const auto i = edge_index(e);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  void erase(const Edge& e) {
    check(e);
    const auto i = edge_index(e);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  bool contains(const Edge& e) const {
    if (e.v > n_) return false;
    const auto i = edge_index(e);
    return (words_[i / 64] >> (i % 64)) & 1U;
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  bool disjoint(const EdgeSet& other) const {
    same_n(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return false;
    return true;
  }

  bool subset_of(const EdgeSet& other) const {
    same_n(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  EdgeSet& operator&=(const EdgeSet& other) {
    same_n(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  EdgeSet& operator|=(const EdgeSet& other) {
    same_n(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  EdgeSet& operator-=(const EdgeSet& other) {
    same_n(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }

  // Edges in increasing edge_index order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        const auto b = static_cast<std::size_t>(std::countr_zero(bits));
        out.push_back(edge_from_index(w * 64 + b));
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet& a, const EdgeSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.words_.begin(), a.words_.end(), b.words_.begin(),
                                                  b.words_.end());
  }

 private:
  void check(const Edge& e) const {
    if (e.v > n_) throw OutOfRange("edge " + to_string(e) + " outside K_" + std::to_string(n_));
  }
  void same_n(const EdgeSet& other) const {
    if (other.n_ != n_) throw MismatchedN("edge sets over different vertex counts");
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::string to_string(const EdgeSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : s.edges()) {
    if (!first) out += ",";
    out += to_string(e);
    first = false;
  }
  return out + "}";
}

// Throws NotAPermutation unless `order` is a permutation of 1..order.size().
inline void require_permutation(std::span<const Vertex> order) {
  const auto n = order.size();
  if (n == 0) throw NotAPermutation("empty vertex sequence");
  std::vector<bool> seen(n + 1, false);
  for (auto v : order) {
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw NotAPermutation("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)])
      throw NotAPermutation("vertex " + std::to_string(v) + " repeats");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

// A Hamilton path of K_n in canonical orientation. Also keeps the position of
// every vertex so that edge membership is a constant-time query.
class HamiltonPath {
 public:
  HamiltonPath() = default;

  // Validates and canonicalizes.
  explicit HamiltonPath(std::vector<Vertex> order) : order_(std::move(order)) {
    require_permutation(order_);
    if (std::lexicographical_compare(order_.rbegin(), order_.rend(), order_.begin(), order_.end()))
      std::reverse(order_.begin(), order_.end());
    index_positions();
  }

  int n() const { return static_cast<int>(order_.size()); }
  std::span<const Vertex> order() const { return order_; }
  Vertex operator[](std::size_t i) const { return order_[i]; }

  // 0-based position of vertex v along the path.
  int position(Vertex v) const { return position_[static_cast<std::size_t>(v)]; }

  // Edge at 1-based position i, joining the i-th and (i+1)-th vertices.
  Edge edge_at(std::size_t i) const { return Edge(order_[i - 1], order_[i]); }

  bool has_edge(Vertex a, Vertex b) const {
    const int d = position(a) - position(b);
    return d == 1 || d == -1;
  }
  bool has_edge(const Edge& e) const {
    return e.v <= n() && has_edge(e.u, e.v);
  }

  // Degree of v in this path (1 at the ends, 2 inside).
  int degree(Vertex v) const {
    const int p = position(v);
    return (p > 0 ? 1 : 0) + (p + 1 < n() ? 1 : 0);
  }

  friend bool operator==(const HamiltonPath& a, const HamiltonPath& b) { return a.order_ == b.order_; }
  friend auto operator<=>(const HamiltonPath& a, const HamiltonPath& b) { return a.order_ <=> b.order_; }

 private:
  void index_positions() {
    position_.assign(order_.size() + 1, -1);
    for (std::size_t i = 0; i < order_.size(); ++i) position_[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
  }

  std::vector<Vertex> order_;
  std::vector<int> position_;
};

inline HamiltonPath canonicalize(std::span<const Vertex> order) {
  return HamiltonPath(std::vector<Vertex>(order.begin(), order.end()));
}

inline std::string to_string(const HamiltonPath& p) {
  std::string out;
  for (std::size_t i = 0; i < p.order().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out;
}

inline EdgeSet edges_of(const HamiltonPath& path) {
  EdgeSet out(path.n());
  for (std::size_t i = 1; i < path.order().size(); ++i) out.insert(path.edge_at(i));
  return out;
}

// The `len` consecutive edges starting at 1-based edge position `start`.
inline EdgeSet window(const HamiltonPath& path, std::size_t start, std::size_t len) {
  const auto edges = path.order().size() - 1;
  if (start < 1 || len < 1 || start + len - 1 > edges)
    throw OutOfRange("window [" + std::to_string(start) + ", +" + std::to_string(len) + ") exceeds the " +
                     std::to_string(edges) + " edges of the path");
  EdgeSet out(path.n());
  for (std::size_t i = start; i < start + len; ++i) out.insert(path.edge_at(i));
  return out;
}

// Lexicographic stream of the n!/2 canonical Hamilton paths of K_n.
//
// Sequences are generated directly with first < last: a vertex may occupy an
// interior slot only if some vertex larger than the first one stays free for
// the final slot.
class PathStream {
 public:
  explicit PathStream(int n) : n_(n) {
    if (n < 2 || n > 63) throw BadParameters("path enumeration needs 2 <= n <= 63");
    order_.assign(static_cast<std::size_t>(n), 0);
  }

  std::optional<HamiltonPath> next() {
    if (done_) return std::nullopt;
    bool ok = started_ ? advance() : fill_from(0);
    started_ = true;
    if (!ok) {
      done_ = true;
      return std::nullopt;
    }
    return HamiltonPath(order_);
  }

 private:
  bool allowed(int pos, Vertex v) const {
    if (pos == 0) return v < n_;
    if (pos == n_ - 1) return v > order_[0];
    // Keep a vertex above order_[0] free for the last slot.
    const auto above = used_ | (std::uint64_t{1} << v);
    for (Vertex w = order_[0] + 1; w <= n_; ++w)
      if (!(above & (std::uint64_t{1} << w))) return true;
    return false;
  }

  // Smallest free vertex greater than `after` that may occupy `pos`.
  Vertex pick(int pos, Vertex after) const {
    for (Vertex v = after + 1; v <= n_; ++v)
      if (!(used_ & (std::uint64_t{1} << v)) && allowed(pos, v)) return v;
    return 0;
  }

  bool fill_from(int pos) {
    for (int p = pos; p < n_; ++p) {
      const Vertex v = pick(p, 0);
      if (v == 0) return false;
      place(p, v);
    }
    return true;
  }

  void place(int pos, Vertex v) {
    order_[static_cast<std::size_t>(pos)] = v;
    used_ |= std::uint64_t{1} << v;
  }

  bool advance() {
    for (int pos = n_ - 1; pos >= 0; --pos) {
      const Vertex current = order_[static_cast<std::size_t>(pos)];
      used_ &= ~(std::uint64_t{1} << current);
      const Vertex v = pick(pos, current);
      if (v != 0) {
        place(pos, v);
        return fill_from(pos + 1);
      }
    }
    return false;
  }

  int n_;
  std::vector<Vertex> order_;
  std::uint64_t used_ = 0;
  bool started_ = false;
  bool done_ = false;
};

template <typename F>
void for_each_path(int n, F&& visit) {
  PathStream stream(n);
  while (auto p = stream.next()) visit(*p);
}

inline std::vector<HamiltonPath> all_paths(int n) {
  std::vector<HamiltonPath> out;
  for_each_path(n, [&](const HamiltonPath& p) { out.push_back(p); });
  return out;
}

}  // namespace lastsep
