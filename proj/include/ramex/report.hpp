#pragma once

/**
 * @file report.hpp
 * @brief Report documents and their JSON / CSV / text renderings.
 *
 * JSON output is canonical: keys sorted, two-space indentation, a trailing
 * newline, and no floating point anywhere. Rationals are always written as
 * "num/den" strings, integers wider than 64 bits as decimal strings.
 */

#include "ramex/c2.hpp"
#include "ramex/chebotarev.hpp"
#include "ramex/translate.hpp"

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ramex {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline std::string rat(const Rational& q) { return rational_string(q); }

struct ReportDoc {
  std::string command;
  json config = json::object();   // every effective parameter, including the seed
  json payload = json::object();
  std::vector<std::vector<std::string>> table;  // CSV rows, first row is the header
  std::vector<std::string> summary;             // text rendering
  std::optional<json> timing;                   // only with --timing; breaks byte identity
  bool inconclusive = false;
};

// ---------------------------------------------------------------------------
// Payload fragments.

inline json to_json(const RamificationPolynomial& r) {
  return {{"poly", to_string(r.poly)},
          {"degree", r.poly.degree()},
          {"has_infinity", r.has_infinity},
          {"provenance", to_string(r.provenance)},
          {"superset", r.superset}};
}

inline json to_json(const GroupVerdict& v) {
  return {{"verdict", to_string(v.verdict)},
          {"tv_distance", rat(v.tv_distance)},
          {"threshold", rat(v.threshold)},
          {"sample_size", v.sample_size},
          {"witness", v.witness},
          {"notes", v.notes}};
}

inline json to_json(const FreqTable& t) {
  json counts = json::object();
  for (const auto& [c, n] : t.counts) counts[c.str()] = n;
  return {{"bound", t.bound}, {"good_primes", t.total}, {"bad_primes", t.bad}, {"counts", counts}};
}

inline FreqTable freq_table_from_json(const json& j) {
  FreqTable t;
  t.bound = j.at("bound").get<std::uint64_t>();
  t.total = j.at("good_primes").get<std::uint64_t>();
  t.bad = j.at("bad_primes").get<std::uint64_t>();
  for (const auto& [key, n] : j.at("counts").items()) {
    std::vector<unsigned> parts;
    std::stringstream ss(key);
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(static_cast<unsigned>(std::stoul(part)));
    t.counts[CycleType(parts)] = n.get<std::uint64_t>();
  }
  return t;
}

inline json to_json(const WitnessScan& s) {
  return {{"bound", s.bound}, {"witnesses", s.witnesses}, {"good_primes", s.good}, {"bad_primes", s.bad}};
}

inline WitnessScan witness_scan_from_json(const json& j) {
  WitnessScan s;
  s.bound = j.at("bound").get<u64>();
  s.witnesses = j.at("witnesses").get<std::vector<u64>>();
  s.good = j.at("good_primes").get<std::uint64_t>();
  s.bad = j.at("bad_primes").get<std::uint64_t>();
  return s;
}

inline json to_json(const RatFunc& g) {
  return {{"g1", to_string(g.g1, "X")}, {"g2", to_string(g.g2, "X")}, {"degree", g.degree()}, {"height", height(g).get_str()}};
}

inline json to_json(const WitnessReport& r) {
  json blocks = json::array();
  for (const auto& b : r.blocks) blocks.push_back({{"block", b.block}, {"branch_point", b.root}, {"group", to_json(b.verdict)}});
  return {{"cover_ramification", to_json(r.cover_ram)},
          {"reference_ramification", to_json(r.reference_ram)},
          {"g", to_json(r.g)},
          {"disjoint", r.disjoint},
          {"translate_ramification", to_json(r.translate_ram)},
          {"blockwise", r.blockwise},
          {"blocks", blocks},
          {"independence", r.independence ? to_json(*r.independence) : json(nullptr)},
          {"witnesses", r.scan.witnesses},
          {"good_primes", r.scan.good},
          {"bad_primes", r.scan.bad},
          {"empirical_density", rat(r.scan.density())},
          {"predicted_density", r.predicted_density ? json(rat(*r.predicted_density)) : json(nullptr)},
          {"parameters", {{"bound", r.bound}, {"tol", rat(r.tol)}, {"seed", r.seed}}},
          {"notes", r.notes}};
}

inline std::string to_string(SamplingMode m) { return m == SamplingMode::Exhaustive ? "EXHAUSTIVE" : "MONTE-CARLO"; }

inline json to_json(const DensityCurve& c) {
  json rows = json::array();
  for (const auto& r : c.rows)
    rows.push_back({{"H", r.height},
                    {"total", r.total},
                    {"valid", r.valid},
                    {"disjoint", r.disjoint},
                    {"witness_bearing", r.witness_bearing},
                    {"fraction", rat(r.fraction())}});
  json mode = {{"kind", to_string(c.options.mode)}};
  if (c.options.mode == SamplingMode::MonteCarlo) {
    mode["seed"] = c.options.seed;
    mode["samples"] = c.options.samples;
  } else {
    mode["budget"] = c.options.budget;
  }
  return {{"k", c.k}, {"bound", c.bound}, {"exact_degree", c.options.exact_degree}, {"mode", mode}, {"rows", rows}};
}

inline json to_json(const SpecializationSet& s) {
  json kernels = json::array();
  for (const auto& [d, t0] : s.kernels) kernels.push_back({{"kernel", d.get_str()}, {"t0", point_string(t0)}});
  json ramified = json::array();
  for (const auto& t0 : s.ramified) ramified.push_back(point_string(t0));
  return {{"h", to_string(s.h, "t")}, {"height", s.height}, {"kernels", kernels}, {"ramified", ramified}};
}

inline json to_json(const C2Comparison& c) {
  auto strs = [](const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& d : v) a.push_back(d.get_str());
    return a;
  };
  return {{"first", to_json(c.first)},
          {"second", to_json(c.second)},
          {"only_in_1", strs(c.only_in_1)},
          {"only_in_2", strs(c.only_in_2)},
          {"common", strs(c.common)},
          {"note", "differences are relative to the search box; only refutations of equality are meaningful"}};
}

// ---------------------------------------------------------------------------
// Tables for CSV.

inline std::vector<std::vector<std::string>> density_table(const DensityCurve& c) {
  std::vector<std::vector<std::string>> t{{"H", "total", "valid", "witness_bearing", "fraction"}};
  for (const auto& r : c.rows)
    t.push_back({std::to_string(r.height), std::to_string(r.total), std::to_string(r.valid),
                 std::to_string(r.witness_bearing), rat(r.fraction())});
  return t;
}

// ---------------------------------------------------------------------------
// Rendering.

inline json to_json(const ReportDoc& d) {
  json j = {{"schema_version", kSchemaVersion}, {"command", d.command}, {"config", d.config}, {"payload", d.payload}};
  if (d.timing) j["timing"] = *d.timing;
  return j;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

enum class Format { Json, Csv, Text };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw std::invalid_argument("unknown format: " + s);
}

inline std::string emit_report(const ReportDoc& d, Format f) {
  switch (f) {
    case Format::Json:
      return to_json(d).dump(2) + "\n";
    case Format::Csv: {
      std::string out;
      for (const auto& row : d.table) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
        out += "\n";
      }
      return out;
    }
    case Format::Text: {
      std::string out = d.command + "\n";
      for (const auto& line : d.summary) out += "  " + line + "\n";
      if (d.inconclusive) out += "  INCONCLUSIVE\n";
      return out;
    }
  }
  return {};
}

}  // namespace ramex
