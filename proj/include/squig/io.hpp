#pragma once

/**
 * @file io.hpp
 * @brief JSON forms of triangles and MacLaurin tables, and the on-disk
 *        coefficient cache.
 *
 * Exact integers travel as decimal strings, binary64 values as JSON numbers
 * (nlohmann::json writes the shortest representation that round-trips).
 */

#include "squig/bigint.hpp"
#include "squig/errors.hpp"
#include "squig/series.hpp"
#include "squig/triangle.hpp"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace squig {

using json = nlohmann::json;

inline json to_json(const CoeffTriangle& tri) {
  const SquigParams& s = tri.params();
  json rows = json::array();
  for (int k = 0; k <= tri.max_row(); ++k) {
    json entries = json::array();
    for (const auto& [j, v] : tri.row(k)) entries.push_back({{"j", j}, {"value", to_decimal(v)}});
    rows.push_back({{"k", k}, {"entries", std::move(entries)}});
  }
  return {{"p", s.p}, {"m", s.m}, {"n", s.n}, {"K", tri.max_row()}, {"rows", std::move(rows)}};
}

inline CoeffTriangle triangle_from_json(const json& doc) {
  const SquigParams s{doc.at("p").get<int>(), doc.at("m").get<int>(), doc.at("n").get<int>()};
  validate(s, true);
  const int K = doc.at("K").get<int>();
  const json& rows_in = doc.at("rows");
  if (K < 0 || rows_in.size() != static_cast<std::size_t>(K) + 1) {
    throw std::invalid_argument("triangle_from_json: row count does not match K");
  }
  std::vector<std::map<int, BigInt>> rows(static_cast<std::size_t>(K) + 1);
  for (const json& r : rows_in) {
    const int k = r.at("k").get<int>();
    if (k < 0 || k > K) throw std::invalid_argument("triangle_from_json: row index out of range");
    for (const json& e : r.at("entries")) {
      rows[static_cast<std::size_t>(k)][e.at("j").get<int>()] = from_decimal(e.at("value").get<std::string>());
    }
  }
  return CoeffTriangle(s, std::move(rows));
}

inline json to_json(const MacLaurinTable& t) {
  json doc = {{"p", t.params.p}, {"m", t.params.m}, {"n", t.params.n}, {"J", t.J}, {"floats", t.floats}};
  if (!t.numerators.empty()) {
    json nums = json::array();
    for (const auto& v : t.numerators) nums.push_back(to_decimal(v));
    doc["numerators"] = std::move(nums);
  }
  return doc;
}

inline MacLaurinTable maclaurin_from_json(const json& doc) {
  MacLaurinTable t;
  t.params = {doc.at("p").get<int>(), doc.at("m").get<int>(), doc.at("n").get<int>()};
  validate(t.params, true);
  t.J = doc.at("J").get<int>();
  t.floats = doc.at("floats").get<std::vector<double>>();
  if (t.J < 0 || t.floats.size() != static_cast<std::size_t>(t.J) + 1) {
    throw std::invalid_argument("maclaurin_from_json: floats length does not match J");
  }
  if (doc.contains("numerators")) {
    for (const json& v : doc.at("numerators")) t.numerators.push_back(from_decimal(v.get<std::string>()));
    if (t.numerators.size() != t.floats.size()) {
      throw std::invalid_argument("maclaurin_from_json: numerators length does not match J");
    }
  }
  return t;
}

/// One cached table together with the pi_p and epsilon it was sized for.
struct CacheEntry {
  double epsilon = 0.0;
  double pi_p = 0.0;
  MacLaurinTable table;
};

struct CacheFile {
  static constexpr int format_version = 1;
  std::vector<CacheEntry> entries;

  const CacheEntry* find(SquigParams s, double epsilon) const {
    for (const auto& e : entries) {
      if (e.table.params == s && e.epsilon == epsilon) return &e;
    }
    return nullptr;
  }
};

inline json to_json(const CacheFile& cache) {
  json entries = json::array();
  for (const auto& e : cache.entries) {
    json doc = to_json(e.table);
    doc["epsilon"] = e.epsilon;
    doc["pi_p"] = e.pi_p;
    entries.push_back(std::move(doc));
  }
  return {{"format_version", CacheFile::format_version}, {"entries", std::move(entries)}};
}

inline CacheFile cache_from_json(const json& doc) {
  const int version = doc.at("format_version").get<int>();
  if (version != CacheFile::format_version) {
    throw std::invalid_argument("cache: unsupported format_version " + std::to_string(version));
  }
  CacheFile cache;
  for (const json& e : doc.at("entries")) {
    cache.entries.push_back({e.at("epsilon").get<double>(), e.at("pi_p").get<double>(), maclaurin_from_json(e)});
  }
  return cache;
}

/// $SQUIG_CACHE_DIR, or the current directory when unset.
inline std::filesystem::path cache_directory() {
  if (const char* dir = std::getenv("SQUIG_CACHE_DIR"); dir != nullptr && *dir != '\0') return dir;
  return std::filesystem::current_path();
}

inline std::filesystem::path default_cache_path() { return cache_directory() / "squig_cache.json"; }

inline void save_cache(const CacheFile& cache, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cache: cannot write " + path.string());
  out << to_json(cache).dump(1) << '\n';
  if (!out) throw std::runtime_error("cache: write failed for " + path.string());
}

inline CacheFile load_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cache: cannot read " + path.string());
  return cache_from_json(json::parse(in));
}

/// Cache entries for the squine and cosquine tables of one p.
inline CacheFile cache_for(int p, double pi_p, double epsilon) {
  const int J = required_terms(p, pi_p, epsilon);
  CacheFile cache;
  cache.entries.push_back({epsilon, pi_p, maclaurin(squine_params(p), J, true)});
  cache.entries.push_back({epsilon, pi_p, maclaurin(cosquine_params(p), J, true)});
  return cache;
}

}  // namespace squig
