#pragma once

// Text formats for path families and code families, and the append-only
// JSON-lines cache of completed searches.
//
// Path family file:
//   # n=8 k=4 condition=private-subpath
//   1,5,2,6,3,7,4,8
//   1,7,2,8,3,5,4,6
// Code family file:
//   # n=4 d=1
//   0000
//   1000
// Blank lines and other '#' lines are ignored in both.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lastsep/core.hpp"
#include "lastsep/predicates.hpp"
#include "lastsep/search.hpp"

namespace lastsep {

inline constexpr std::string_view kCodeVersion = "lastsep-1.0.0";

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::optional<long long> parse_int(std::string_view s) {
  s = trim(s);
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

// key=value tokens of a "# ..." header line.
inline std::map<std::string, std::string> header_fields(std::string_view comment) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(comment)};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq != std::string::npos && eq > 0) out[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return out;
}

inline int header_int(const std::map<std::string, std::string>& fields, const std::string& key, std::size_t line) {
  const auto v = parse_int(fields.at(key));
  if (!v) throw ParseError(line, "header field " + key + " is not an integer");
  return static_cast<int>(*v);
}

}  // namespace detail

inline std::vector<Vertex> parse_path_line(std::string_view line, std::size_t line_no) {
  std::vector<Vertex> order;
  std::size_t pos = 0;
  for (;;) {
    const auto comma = line.find(',', pos);
    const auto field = line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    const auto v = detail::parse_int(field);
    if (!v) throw ParseError(line_no, "expected a vertex label, got '" + std::string(detail::trim(field)) + "'");
    order.push_back(static_cast<Vertex>(*v));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return order;
}

struct ParsedFamily {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<std::string> condition;
  std::vector<HamiltonPath> members;
};

// Reads a path family. Paths are canonicalized; repeated paths (also as
// reversals) raise DuplicateMember, malformed lines raise ParseError.
inline ParsedFamily read_family(std::istream& in) {
  ParsedFamily out;
  std::string raw;
  std::size_t line_no = 0;
  std::map<HamiltonPath, std::size_t> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto fields = detail::header_fields(line.substr(1));
      if (fields.count("n")) out.n = detail::header_int(fields, "n", line_no);
      if (fields.count("k")) out.k = detail::header_int(fields, "k", line_no);
      if (fields.count("condition")) out.condition = fields.at("condition");
      continue;
    }
    const auto order = parse_path_line(line, line_no);
    if (out.n && static_cast<int>(order.size()) != *out.n)
      throw ParseError(line_no, "path has " + std::to_string(order.size()) + " vertices, header says n=" +
                                    std::to_string(*out.n));
    HamiltonPath path;
    try {
      path = HamiltonPath(order);
    } catch (const NotAPermutation& e) {
      throw ParseError(line_no, e.what());
    }
    if (!out.members.empty() && path.n() != out.members.front().n())
      throw ParseError(line_no, "path length differs from earlier paths");
    if (auto [it, fresh] = seen.emplace(path, line_no); !fresh)
      throw DuplicateMember("line " + std::to_string(line_no) + ": path " + to_string(path) +
                            " repeats line " + std::to_string(it->second));
    out.members.push_back(std::move(path));
  }
  if (!out.n && !out.members.empty()) out.n = out.members.front().n();
  return out;
}

inline void write_family(std::ostream& out, const PathFamily& family) {
  out << "# n=" << family.n << " k=" << family.condition.k << " condition=" << condition_name(family.condition.kind)
      << "\n";
  for (const auto& p : family.members) out << to_string(p) << "\n";
}

inline CodeFamily read_code_family(std::istream& in) {
  CodeFamily code{0, 1, {}};
  std::optional<int> n;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto fields = detail::header_fields(line.substr(1));
      if (fields.count("n")) n = detail::header_int(fields, "n", line_no);
      if (fields.count("d")) code.min_distance = detail::header_int(fields, "d", line_no);
      continue;
    }
    if (line.find_first_not_of("01") != std::string_view::npos)
      throw ParseError(line_no, "code words are 0/1 strings");
    if (line.size() > 64) throw ParseError(line_no, "code words are limited to 64 characters");
    if (!n) n = static_cast<int>(line.size());
    if (static_cast<int>(line.size()) != *n)
      throw ParseError(line_no, "word length " + std::to_string(line.size()) + " differs from n=" + std::to_string(*n));
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < line.size(); ++i)
      if (line[i] == '1') bits |= std::uint64_t{1} << i;
    code.words.emplace_back(*n, bits);
  }
  code.n = n.value_or(0);
  return code;
}

inline void write_code_family(std::ostream& out, const CodeFamily& code) {
  out << "# n=" << code.n << " d=" << code.min_distance << "\n";
  for (const auto& w : code.words) out << w.characteristic() << "\n";
}

// One completed search.
struct CacheRecord {
  int n = 0;
  int k = 0;
  std::string condition;
  std::string optimum;
  bool exhaustive = false;
  std::vector<std::string> witness;
  std::uint64_t nodes = 0;
  std::string seconds;
  std::string version{kCodeVersion};
};

inline nlohmann::ordered_json to_json(const CacheRecord& r) {
  return {{"n", r.n},
          {"k", r.k},
          {"condition", r.condition},
          {"optimum", r.optimum},
          {"exhaustive", r.exhaustive},
          {"witness", r.witness},
          {"nodes", r.nodes},
          {"seconds", r.seconds},
          {"version", r.version}};
}

inline CacheRecord cache_record_from_json(const nlohmann::json& j) {
  CacheRecord r;
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  r.condition = j.at("condition").get<std::string>();
  r.optimum = j.at("optimum").get<std::string>();
  r.exhaustive = j.at("exhaustive").get<bool>();
  r.witness = j.at("witness").get<std::vector<std::string>>();
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.seconds = j.at("seconds").get<std::string>();
  r.version = j.at("version").get<std::string>();
  return r;
}

// Seconds with millisecond resolution as a decimal string.
inline std::string seconds_string(std::chrono::duration<double> d) {
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  std::string frac = std::to_string(ms % 1000);
  frac.insert(0, 3 - frac.size(), '0');
  return std::to_string(ms / 1000) + "." + frac;
}

// k as stored in the cache: 0 for conditions without a parameter.
inline int cache_k(const PairwiseCondition& c) { return c.uses_k() ? c.k : 0; }

inline CacheRecord make_record(int n, const SearchResult& r) {
  CacheRecord rec;
  rec.n = n;
  rec.k = cache_k(r.witness.condition);
  rec.condition = std::string(condition_name(r.witness.condition.kind));
  rec.optimum = std::to_string(r.optimum);
  rec.exhaustive = r.exhaustive;
  for (const auto& p : r.witness.members) rec.witness.push_back(to_string(p));
  rec.nodes = r.nodes;
  rec.seconds = seconds_string(r.wall_time);
  return rec;
}

// Append-only JSON-lines file of CacheRecord.
class ResultsCache {
 public:
  explicit ResultsCache(std::filesystem::path path) : path_(std::move(path)) {}

  const std::filesystem::path& path() const { return path_; }

  std::vector<CacheRecord> load() const {
    std::vector<CacheRecord> out;
    std::ifstream in(path_);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (detail::trim(line).empty()) continue;
      try {
        out.push_back(cache_record_from_json(nlohmann::json::parse(line)));
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(line_no, std::string("bad cache record: ") + e.what());
      }
    }
    return out;
  }

  // Latest exhaustive record for this key written by this code version.
  std::optional<CacheRecord> find(int n, const PairwiseCondition& c) const {
    std::optional<CacheRecord> hit;
    for (auto& r : load())
      if (r.exhaustive && r.n == n && r.k == cache_k(c) && r.condition == condition_name(c.kind) &&
          r.version == kCodeVersion)
        hit = std::move(r);
    return hit;
  }

  void append(const CacheRecord& r) const {
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error("cannot open cache file " + path_.string());
    out << to_json(r).dump() << "\n";
  }

 private:
  std::filesystem::path path_;
};

}  // namespace lastsep
