#pragma once

// Command-line front end. run_cli() is the whole program minus main(), so
// tests can drive every subcommand in-process.
//
// Exit codes: 0 success, 1 condition violated or proof check failed,
// 2 usage/parse error, 3 construction failed its own verification,
// 4 search graph over the size ceiling.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lastsep/bounds.hpp"
#include "lastsep/constructions.hpp"
#include "lastsep/core.hpp"
#include "lastsep/io.hpp"
#include "lastsep/predicates.hpp"
#include "lastsep/proof_checks.hpp"
#include "lastsep/search.hpp"

namespace lastsep::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kUsage = 2,
  kSelfCheck = 3,
  kTooLarge = 4,
};

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  int n = 0;
  int k = 0;
  std::string condition = "private-subpath";
  std::uint64_t seed = 0;
  double time_budget = 300.0;
  std::string output_format = "json";
  std::string paths_file;
  std::string cache_file;
  std::string out_file;
  unsigned workers = 0;
};

namespace detail {

inline void render_text(std::ostream& out, const Json& value, const std::string& indent) {
  for (const auto& [key, v] : value.items()) {
    if (v.is_array()) {
      out << indent << key << ":\n";
      for (const auto& item : v) {
        if (item.is_object()) {
          out << indent << "  -\n";
          render_text(out, item, indent + "    ");
        } else {
          out << indent << "  - " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
        }
      }
    } else if (v.is_object()) {
      out << indent << key << ":\n";
      render_text(out, v, indent + "  ");
    } else {
      out << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

inline void render(std::ostream& out, const Json& value, const std::string& format) {
  if (format == "text") {
    render_text(out, value, "");
  } else {
    out << value.dump(2) << "\n";
  }
}

inline std::string default_cache_path() {
  if (const char* env = std::getenv("LASTING_SEP_CACHE"); env && *env) return env;
  return "lastsep_cache.jsonl";
}

inline PairwiseCondition make_condition(const std::string& name, int k) {
  return PairwiseCondition{parse_condition_kind(name), k};
}

inline Json witness_json(const PathFamily& family) {
  Json arr = Json::array();
  for (const auto& p : family.members) arr.push_back(to_string(p));
  return arr;
}

inline int cmd_bounds(const RunConfig& cfg, std::optional<int> d, std::ostream& out) {
  const auto r = bounds_m(cfg.n, cfg.k);
  Json j;
  j["n"] = cfg.n;
  j["k"] = cfg.k;
  j["theorem"] = std::string(theorem_name(r.theorem));
  j["applicable"] = r.applicable;
  if (!r.applicable) {
    j["reason"] = r.reason;
  } else {
    j["lower"] = to_string(r.lower);
    j["effective_lower"] = to_string(r.effective_lower);
    j["upper"] = to_string(r.upper);
  }
  j["matching_count"] = to_string(count_matchings(cfg.n));
  if (cfg.k == 2) j["matching_cap"] = to_string(r.matching_cap);
  if (d) {
    Json g;
    g["d"] = *d;
    g["bound"] = to_string(gilbert_bound(cfg.n, *d));
    g["numerator"] = to_string(power(2, cfg.n));
    g["denominator"] = to_string(hamming_ball(cfg.n, *d - 1));
    if (*d == 7) g["n6_weakening_holds"] = gilbert_n6_weakening_holds(cfg.n);
    j["gilbert"] = g;
  }
  render(out, j, cfg.output_format);
  return kOk;
}

inline int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const bool odd = cfg.k % 2 == 1;
  const auto family = odd ? build_odd(cfg.n, cfg.k) : build_even(cfg.n, cfg.k);
  const auto report = verify_family(family, cfg.workers);
  if (!report.ok()) {
    err << "construction (n=" << cfg.n << ", k=" << cfg.k << ") fails its own check on " << report.pairs.size()
        << " pairs; first: [" << to_string(family.members[report.pairs[0].first]) << "] vs ["
        << to_string(family.members[report.pairs[0].second]) << "]\n";
    return kSelfCheck;
  }
  const auto file = cfg.out_file.empty()
                        ? "family_n" + std::to_string(cfg.n) + "_k" + std::to_string(cfg.k) + ".txt"
                        : cfg.out_file;
  std::ofstream f(file);
  if (!f) throw Error("cannot write " + file);
  write_family(f, family);
  Json j;
  j["n"] = cfg.n;
  j["k"] = cfg.k;
  j["construction"] = odd ? "odd" : "even";
  j["size"] = std::to_string(family.size());
  j["verified"] = true;
  j["file"] = file;
  render(out, j, cfg.output_format);
  return kOk;
}

inline int cmd_verify(const RunConfig& cfg, bool condition_given, bool k_given, std::ostream& out,
                      std::ostream& err) {
  std::ifstream in(cfg.paths_file);
  if (!in) {
    err << "cannot open " << cfg.paths_file << "\n";
    return kUsage;
  }
  Json j;
  ViolationReport report;
  if (condition_given && cfg.condition == "private-triangle") {
    const auto code = read_code_family(in);
    report = verify_triangle_family(code, cfg.workers);
    j["n"] = code.n;
    j["condition"] = cfg.condition;
    j["members"] = std::to_string(code.size());
    Json v = Json::array();
    for (const auto& [a, b] : report.pairs)
      v.push_back(Json{{"i", a + 1}, {"j", b + 1}, {"first", code.words[a].characteristic()},
                       {"second", code.words[b].characteristic()}});
    j["violations"] = v;
  } else {
    const auto parsed = read_family(in);
    if (parsed.members.empty()) {
      err << cfg.paths_file << ": no paths\n";
      return kUsage;
    }
    std::string name = condition_given ? cfg.condition : parsed.condition.value_or("");
    if (name.empty()) {
      err << "no condition given and the file header names none\n";
      return kUsage;
    }
    int k = k_given ? cfg.k : parsed.k.value_or(0);
    PathFamily family{*parsed.n, make_condition(name, k), parsed.members};
    report = verify_family(family, cfg.workers);
    j["n"] = family.n;
    j["condition"] = name;
    if (family.condition.uses_k()) j["k"] = k;
    j["members"] = std::to_string(family.size());
    Json v = Json::array();
    for (const auto& [a, b] : report.pairs)
      v.push_back(Json{{"i", a + 1}, {"j", b + 1}, {"first", to_string(family.members[a])},
                       {"second", to_string(family.members[b])}});
    j["violations"] = v;
  }
  j["valid"] = report.ok();
  render(out, j, cfg.output_format);
  return report.ok() ? kOk : kViolation;
}

inline int cmd_search(const RunConfig& cfg, const std::string& method, int restarts, std::ostream& out) {
  const auto condition = make_condition(cfg.condition, cfg.k);
  if (method == "exact") require_search_size(cfg.n);
  require_path_condition(condition, cfg.n);
  const auto cache_path = cfg.cache_file.empty() ? default_cache_path() : cfg.cache_file;
  ResultsCache cache(cache_path);

  Json j;
  j["n"] = cfg.n;
  j["k"] = cache_k(condition);
  j["condition"] = std::string(condition_name(condition.kind));
  j["method"] = method;

  PathFamily witness;
  if (method == "exact") {
    if (auto hit = cache.find(cfg.n, condition)) {
      j["optimum"] = hit->optimum;
      j["exhaustive"] = true;
      j["cache_hit"] = true;
      witness = PathFamily{cfg.n, condition, {}};
      for (const auto& s : hit->witness) witness.members.emplace_back(parse_path_line(s, 0));
    } else {
      SearchOptions options;
      options.time_budget = std::chrono::duration<double>(cfg.time_budget);
      options.workers = cfg.workers;
      const auto r = exact_search(cfg.n, condition, options);
      cache.append(make_record(cfg.n, r));
      j["optimum"] = std::to_string(r.optimum);
      j["exhaustive"] = r.exhaustive;
      j["cache_hit"] = false;
      witness = r.witness;
    }
  } else {
    const auto r = greedy_lower(cfg.n, condition, restarts, cfg.seed);
    cache.append(make_record(cfg.n, r));
    j["optimum"] = std::to_string(r.optimum);
    j["exhaustive"] = false;
    j["cache_hit"] = false;
    witness = r.witness;
  }
  j["cache_file"] = cache_path;
  if (!cfg.out_file.empty()) {
    std::ofstream f(cfg.out_file);
    if (!f) throw Error("cannot write " + cfg.out_file);
    write_family(f, witness);
    j["witness_file"] = cfg.out_file;
  }
  j["witness"] = witness_json(witness);
  render(out, j, cfg.output_format);
  return kOk;
}

inline int cmd_count(const RunConfig& cfg, bool k_given, std::ostream& out) {
  if (cfg.n < 2) throw BadParameters("count needs n >= 2");
  Json j;
  j["n"] = cfg.n;
  j["canonical_paths"] = to_string(factorial(cfg.n) / 2);
  if (cfg.n <= 9) {
    std::uint64_t c = 0;
    for_each_path(cfg.n, [&](const HamiltonPath&) { ++c; });
    j["canonical_paths_enumerated"] = std::to_string(c);
  }
  j["matchings"] = to_string(count_matchings(cfg.n));
  if (cfg.n <= 8) {
    std::set<EdgeSet> distinct;
    for_each_path(cfg.n, [&](const HamiltonPath& p) {
      distinct.insert(odd_edge_matching(p));
      if (cfg.n % 2) distinct.insert(odd_edge_matching(p, MatchingParity::Even));
    });
    j["matchings_enumerated"] = std::to_string(distinct.size());
  }
  if (k_given) {
    j["k"] = cfg.k;
    j["class_size"] = to_string(class_size(cfg.n, cfg.k));
  }
  render(out, j, cfg.output_format);
  return kOk;
}

inline int cmd_gv(const RunConfig& cfg, int d, int min_weight, std::ostream& out) {
  const auto code = gv_family(cfg.n, d, min_weight);
  const auto bound = gilbert_bound(cfg.n, d);
  const auto triangles = verify_triangle_family(code, cfg.workers);
  const auto file =
      cfg.out_file.empty() ? "gv_n" + std::to_string(cfg.n) + "_d" + std::to_string(d) + ".txt" : cfg.out_file;
  std::ofstream f(file);
  if (!f) throw Error("cannot write " + file);
  write_code_family(f, code);
  Json j;
  j["n"] = cfg.n;
  j["d"] = d;
  j["min_weight"] = min_weight;
  j["size"] = std::to_string(code.size());
  j["gilbert_bound"] = to_string(bound);
  j["gilbert_numerator"] = to_string(power(2, cfg.n));
  j["gilbert_denominator"] = to_string(hamming_ball(cfg.n, d - 1));
  j["meets_gilbert"] = Rational(static_cast<long long>(code.size())) >= bound;
  if (d == 7) j["n6_weakening_holds"] = gilbert_n6_weakening_holds(cfg.n);
  j["triangle_check"] = triangles.ok() ? "pass" : "fail";
  j["triangle_violations"] = std::to_string(triangles.pairs.size());
  j["file"] = file;
  render(out, j, cfg.output_format);
  return kOk;
}

struct ProofRanges {
  int n_min = 2;
  int n_max = 40;
  int t1_max_n = 6;
  int deg4_max_n = 6;
  bool skeleton = true;
};

inline std::vector<CheckOutcome> run_proof_checks(const ProofRanges& r) {
  std::vector<CheckOutcome> items;
  items.push_back(check_t1_upper_range(r.n_min, r.n_max));
  items.push_back(check_chain_t2_range(r.n_min, r.n_max));
  for (int n = 4; n <= r.t1_max_n; n += 2) items.push_back(check_matching_class(n));
  for (int n = 3; n <= r.deg4_max_n; ++n) items.push_back(check_degree4_sufficiency(n));
  if (r.skeleton) items.push_back(check_skeleton_class(8, 4));
  for (auto [n, k] : {std::pair{6, 3}, std::pair{8, 4}, std::pair{9, 3}})
    items.push_back(check_class_enumeration(n, k));
  return items;
}

inline int cmd_check_proofs(const RunConfig& cfg, const ProofRanges& ranges, std::ostream& out, std::ostream& err) {
  if (ranges.n_min < 2 || ranges.n_min > ranges.n_max) {
    err << "empty range: --n-min " << ranges.n_min << " --n-max " << ranges.n_max << "\n";
    return kUsage;
  }
  const auto items = run_proof_checks(ranges);
  Json arr = Json::array();
  bool all = true;
  for (const auto& item : items) {
    Json e;
    e["name"] = item.name;
    e["status"] = item.passed ? "pass" : "fail";
    e["detail"] = item.detail;
    if (item.counterexample) e["counterexample"] = *item.counterexample;
    arr.push_back(e);
    all = all && item.passed;
  }
  Json j;
  j["checks"] = arr;
  j["all_passed"] = all;
  render(out, j, cfg.output_format);
  return all ? kOk : kViolation;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamilton path families with private-subpath separation: constructions, checks, bounds, search"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.output_format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--workers", cfg.workers, "Worker threads (0 = all hardware threads)")->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "Exact bounds on M(n,k)");
  std::optional<int> gv_d;
  bounds->add_option("--n", cfg.n)->required();
  bounds->add_option("--k", cfg.k)->required();
  bounds->add_option("--d", gv_d, "Also evaluate the Gilbert bound at distance d");

  auto* construct = app.add_subcommand("construct", "Build and self-verify the tuple-permutation family");
  construct->add_option("--n", cfg.n)->required();
  construct->add_option("--k", cfg.k)->required();
  construct->add_option("--out", cfg.out_file, "Family file (default family_n<n>_k<k>.txt)");

  auto* verify = app.add_subcommand("verify", "Check every pair of a family file");
  verify->add_option("--paths", cfg.paths_file)->required();
  auto* verify_condition = verify->add_option("--condition", cfg.condition, "Overrides the file header");
  auto* verify_k = verify->add_option("--k", cfg.k, "Overrides the file header");

  auto* search = app.add_subcommand("search", "Exact optimum by maximum clique (n <= 8) or greedy lower bound");
  std::string method = "exact";
  int restarts = 8;
  search->add_option("--n", cfg.n)->required();
  search->add_option("--k", cfg.k, "Condition parameter")->capture_default_str();
  search->add_option("--condition", cfg.condition)->capture_default_str();
  search->add_option("--budget", cfg.time_budget, "Time budget in seconds")->capture_default_str();
  search->add_option("--cache", cfg.cache_file, "Results cache (default $LASTING_SEP_CACHE or lastsep_cache.jsonl)");
  search->add_option("--out", cfg.out_file, "Also write the witness family here");
  search->add_option("--method", method)->check(CLI::IsMember({"exact", "greedy"}))->capture_default_str();
  search->add_option("--restarts", restarts)->capture_default_str();
  search->add_option("--seed", cfg.seed)->capture_default_str();

  auto* count = app.add_subcommand("count", "Path, matching and class counts");
  count->add_option("--n", cfg.n)->required();
  auto* count_k = count->add_option("--k", cfg.k, "Also report class_size(n,k)");

  auto* gv = app.add_subcommand("gv", "Greedy lexicographic code and pairwise private-triangle check");
  int d = 7;
  int min_weight = 0;
  gv->add_option("--n", cfg.n)->required();
  gv->add_option("--d", d)->capture_default_str();
  gv->add_option("--min-weight", min_weight)->capture_default_str();
  gv->add_option("--out", cfg.out_file, "Code file (default gv_n<n>_d<d>.txt)");

  auto* proofs = app.add_subcommand("check-proofs", "Exhaustive checks of the bound arguments");
  detail::ProofRanges ranges;
  proofs->add_option("--n-min", ranges.n_min, "Inequality checks from this n")->capture_default_str();
  proofs->add_option("--n-max", ranges.n_max, "Inequality checks up to this n")->capture_default_str();
  proofs->add_option("--t1-max-n", ranges.t1_max_n, "Matching-class exhaustion for even n up to this")
      ->capture_default_str();
  proofs->add_option("--deg4-max-n", ranges.deg4_max_n, "Degree-4 exhaustion up to this n")->capture_default_str();

  std::vector<const char*> argv{"lastsep"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*bounds) return detail::cmd_bounds(cfg, gv_d, out);
    if (*construct) return detail::cmd_construct(cfg, out, err);
    if (*verify) return detail::cmd_verify(cfg, verify_condition->count() > 0, verify_k->count() > 0, out, err);
    if (*search) return detail::cmd_search(cfg, method, restarts, out);
    if (*count) return detail::cmd_count(cfg, count_k->count() > 0, out);
    if (*gv) return detail::cmd_gv(cfg, d, min_weight, out);
    if (*proofs) return detail::cmd_check_proofs(cfg, ranges, out, err);
  } catch (const TooLarge& e) {
    err << e.what() << "\n";
    return kTooLarge;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace lastsep::cli
