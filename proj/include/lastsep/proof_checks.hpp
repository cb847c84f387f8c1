#pragma once

// Exhaustive desk-scale checks of the structural facts the bounds rest on.
// Each check returns a CheckOutcome naming the first counterexample, if any.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lastsep/bounds.hpp"
#include "lastsep/constructions.hpp"
#include "lastsep/core.hpp"
#include "lastsep/predicates.hpp"

namespace lastsep {

struct CheckOutcome {
  std::string name;
  bool passed = true;
  std::string detail;
  std::optional<std::string> counterexample;
};

namespace detail {

inline std::string pair_string(const HamiltonPath& p, const HamiltonPath& q) {
  return "[" + to_string(p) + "] vs [" + to_string(q) + "]";
}

// Groups all canonical paths of K_n by `key` and checks that no two paths in
// the same group satisfy private_subpath(., ., k).
template <typename Key>
CheckOutcome no_private_within_classes(const std::string& name, int n, int k, Key&& key, std::size_t& classes) {
  CheckOutcome out{name, true, {}, {}};
  std::map<EdgeSet, std::vector<HamiltonPath>> groups;
  for_each_path(n, [&](const HamiltonPath& p) { groups[key(p)].push_back(p); });
  classes = groups.size();
  std::uint64_t pairs = 0;
  for (const auto& [_, members] : groups)
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        ++pairs;
        if (out.passed && private_subpath(members[i], members[j], k)) {
          out.passed = false;
          out.counterexample = pair_string(members[i], members[j]);
        }
      }
  out.detail = std::to_string(classes) + " classes, " + std::to_string(pairs) + " same-class pairs";
  return out;
}

}  // namespace detail

// Paths sharing their odd-position matching never have a private 2-subpath,
// and the odd-position matchings of K_n (n even) are exactly its
// count_matchings(n) perfect matchings.
inline CheckOutcome check_matching_class(int n) {
  if (n < 2 || n > 10) throw BadParameters("matching-class check needs 2 <= n <= 10");
  std::size_t classes = 0;
  auto out = detail::no_private_within_classes(
      "matching-class n=" + std::to_string(n), n, 2, [](const HamiltonPath& p) { return odd_edge_matching(p); },
      classes);
  if (n % 2 == 0) {
    const auto expected = count_matchings(n);
    out.detail += ", expected " + to_string(expected) + " matchings";
    if (Integer(classes) != expected) {
      out.passed = false;
      if (!out.counterexample) out.counterexample = "found " + std::to_string(classes) + " distinct matchings";
    }
  }
  return out;
}

// Paths with equal skeletons never have a private k-subpath.
inline CheckOutcome check_skeleton_class(int n, int k) {
  if (n > 10) throw BadParameters("skeleton-class check needs n <= 10");
  std::size_t classes = 0;
  return detail::no_private_within_classes(
      "skeleton-class n=" + std::to_string(n) + " k=" + std::to_string(k), n, k,
      [k](const HamiltonPath& p) { return skeleton(p, k); }, classes);
}

// degree4_union(p, q) implies private_subpath(p, q, 2) over all pairs.
inline CheckOutcome check_degree4_sufficiency(int n) {
  if (n < 2 || n > 8) throw BadParameters("degree-4 check needs 2 <= n <= 8");
  CheckOutcome out{"degree4-implies-private2 n=" + std::to_string(n), true, {}, {}};
  const auto paths = all_paths(n);
  std::uint64_t pairs = 0;
  std::uint64_t degree4 = 0;
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      ++pairs;
      if (degree4_union(paths[i], paths[j])) ++degree4;
      if (out.passed && !degree4_implies_private2(paths[i], paths[j])) {
        out.passed = false;
        out.counterexample = detail::pair_string(paths[i], paths[j]);
      }
    }
  out.detail = std::to_string(pairs) + " pairs, " + std::to_string(degree4) + " with a degree-4 vertex";
  return out;
}

// Brute-force count of orders carrying the fixed edges at every k-th edge
// position against class_size(n, k).
inline CheckOutcome check_class_enumeration(int n, int k) {
  CheckOutcome out{"class-size n=" + std::to_string(n) + " k=" + std::to_string(k), true, {}, {}};
  const auto counted = count_skeleton_class(n, k);
  const auto formula = class_size(n, k);
  out.detail = "enumerated " + std::to_string(counted) + ", formula " + to_string(formula);
  if (Integer(counted) != formula) {
    out.passed = false;
    out.counterexample = out.detail;
  }
  return out;
}

inline CheckOutcome check_t1_upper_range(int n_min, int n_max) {
  CheckOutcome out{"t1-upper n=" + std::to_string(n_min) + ".." + std::to_string(n_max), true, {}, {}};
  for (int n = n_min; n <= n_max; ++n)
    if (!check_t1_upper(n)) {
      out.passed = false;
      out.counterexample = "n=" + std::to_string(n);
      break;
    }
  out.detail = std::to_string(n_max - n_min + 1) + " values of n";
  return out;
}

inline CheckOutcome check_chain_t2_range(int n_min, int n_max) {
  CheckOutcome out{"t2-chain n=" + std::to_string(n_min) + ".." + std::to_string(n_max), true, {}, {}};
  int checked = 0;
  for (int n = n_min; n <= n_max; ++n)
    for (int k = 4; k <= n; k += 2) {
      if (n % k != 0) continue;
      ++checked;
      if (out.passed && !check_chain_t2(n, k)) {
        out.passed = false;
        out.counterexample = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      }
    }
  out.detail = std::to_string(checked) + " applicable (n,k)";
  return out;
}

}  // namespace lastsep
