#pragma once

// One function per CLI subcommand. Each takes its fully-resolved options
// and returns a ReportDoc; the CLI only parses flags and prints.

#include "ramex/cache.hpp"
#include "ramex/parse.hpp"
#include "ramex/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ramex {

struct RamifyOptions {
  std::optional<std::string> cover;  // f(t, X)
  std::optional<std::string> ram;    // binary form in X, Y
};

struct TranslateOptions {
  std::string ram, g1, g2;
  std::optional<unsigned> k;
};

struct WitnessOptions {
  std::string f2, ram, g1, g2;
  u64 bound = 10000;
  std::string tol = "1/20";
  u64 seed = 0;
  std::optional<unsigned> k;
};

struct ChebotarevOptions {
  std::string poly;
  u64 bound = 100000;
  std::string tol = "1/20";
};

struct DensityGOptions {
  std::optional<std::string> cover, f2_cover, ram, f2;
  unsigned k = 2;
  std::vector<unsigned> heights;
  u64 bound = 10000;
  std::string mode = "exhaustive";
  std::uint64_t samples = 10000;
  u64 seed = 0;
  std::uint64_t budget = 1000000;
  unsigned jobs = 1;
  bool exact_degree = false;
};

struct C2CompareOptions {
  std::string h1, h2;
  unsigned height = 20;
};

struct C2RealizeOptions {
  std::string d, m;
};

namespace detail {

inline CoverSpec cover_spec(const std::optional<std::string>& defining, const std::optional<std::string>& ram,
                            const std::string& what) {
  if (defining && ram) throw std::invalid_argument(what + ": give either a defining polynomial or a ramification polynomial, not both");
  if (defining) return CoverSpec::defining(parse_cover(*defining), *defining);
  if (ram) return CoverSpec::ramification(parse_form(*ram), *ram);
  throw std::invalid_argument(what + ": missing cover");
}

inline RatFunc rat_func(const std::string& g1, const std::string& g2, std::optional<unsigned> k) {
  RatFunc g{parse_univariate(g1), parse_univariate(g2), 0};
  g.k = k ? *k : g.degree();
  return g;
}

inline json opt(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

}  // namespace detail

/// With both --cover and --ram, the supplied polynomial is authoritative and
/// is checked against the discriminant-radical candidate locus.
inline ReportDoc run_ramify(const RamifyOptions& o) {
  ReportDoc d;
  d.command = "ramify";
  d.config = {{"cover", detail::opt(o.cover)}, {"ram", detail::opt(o.ram)}};
  if (!o.cover && !o.ram) throw std::invalid_argument("ramify: give --cover and/or --ram");
  std::optional<RamificationPolynomial> candidate;
  if (o.cover) {
    const BiPolyT f = parse_cover(*o.cover);
    candidate = ramification_from_cover(CoverSpec::defining(f, *o.cover));
    d.payload["defining"] = to_string(f);
    d.payload["discriminant"] = to_string(discriminant_in_x(f), "t");
  }
  const RamificationPolynomial r =
      o.ram ? ramification_from_cover(CoverSpec::ramification(parse_form(*o.ram), *o.ram)) : *candidate;
  d.payload["ramification"] = to_json(r);
  if (o.ram && candidate) {
    // every true branch point is a discriminant root: deg rad(user * cand) = deg cand
    const bool within = projective_radical(r.poly * candidate->poly).degree() == candidate->poly.degree();
    d.payload["candidate"] = to_json(*candidate);
    d.payload["user_within_candidate"] = within;
    d.summary.push_back("discriminant-radical candidate: " + to_string(candidate->poly));
    if (!within) d.summary.push_back("WARNING: supplied ramification polynomial has roots outside the candidate locus");
  }
  json points = json::array();
  try {
    for (const auto& p : rational_projective_roots(r.poly)) points.push_back(to_string(p));
    d.payload["rational_branch_points"] = points;
  } catch (const std::domain_error&) {
    d.payload["rational_branch_points"] = nullptr;
  }
  d.table = {{"poly", "degree", "has_infinity", "provenance", "superset"},
             {to_string(r.poly), std::to_string(r.poly.degree()), r.has_infinity ? "true" : "false", to_string(r.provenance),
              r.superset ? "true" : "false"}};
  d.summary.insert(d.summary.begin(), {"ramification polynomial: " + to_string(r.poly),
                                       "provenance: " + to_string(r.provenance) + (r.superset ? " (candidate superset)" : "")});
  return d;
}

inline ReportDoc run_translate(const TranslateOptions& o) {
  ReportDoc d;
  d.command = "translate";
  d.config = {{"ram", o.ram}, {"g1", o.g1}, {"g2", o.g2}, {"k", o.k ? json(*o.k) : json(nullptr)}};
  const RamificationPolynomial f = ramification_from_cover(CoverSpec::ramification(parse_form(o.ram)));
  const RatFunc g = reduced(detail::rat_func(o.g1, o.g2, o.k));
  const bool disjoint = branch_locus_disjoint(f, g);
  const RamificationPolynomial m = translate_ramification(f, g);
  d.payload = {{"ramification", to_json(f)},
               {"g", to_json(g)},
               {"g_branch_locus", to_string(branch_form(g))},
               {"disjoint", disjoint},
               {"translate_ramification", to_json(m)}};
  d.table = {{"disjoint", "translate_ramification", "degree", "superset"},
             {disjoint ? "true" : "false", to_string(m.poly), std::to_string(m.poly.degree()), m.superset ? "true" : "false"}};
  d.summary = {std::string("branch loci disjoint: ") + (disjoint ? "yes" : "no"),
               "translate ramification polynomial: " + to_string(m.poly) + (m.superset ? " (SUPERSET)" : "")};
  return d;
}

inline ReportDoc run_witness(const WitnessOptions& o, ScanCache* cache = nullptr) {
  ReportDoc d;
  d.command = "witness";
  d.config = {{"f2", o.f2}, {"ram", o.ram}, {"g1", o.g1}, {"g2", o.g2}, {"bound", o.bound},
              {"tol", o.tol},  {"seed", o.seed}, {"k", o.k ? json(*o.k) : json(nullptr)}};
  const Rational tol = parse_rational(o.tol);
  WitnessScanner scanner;
  if (cache) {
    scanner = [cache](const RamificationPolynomial& f2, const RamificationPolynomial& m2, u64 b) {
      const std::string key = to_string(f2.poly) + ";" + to_string(m2.poly);
      return witness_scan_from_json(
          cache->get_or_compute("witness", key, b, [&] { return to_json(find_witness_primes(f2, m2, b)); }));
    };
  }
  const WitnessReport r = nonparametricity_report(CoverSpec::ramification(parse_form(o.ram), o.ram),
                                                  CoverSpec::ramification(parse_form(o.f2), o.f2),
                                                  detail::rat_func(o.g1, o.g2, o.k), o.bound, tol, o.seed, scanner);
  d.payload = to_json(r);
  d.inconclusive = r.scan.witnesses.empty();
  d.table = {{"prime"}};
  for (u64 p : r.scan.witnesses) d.table.push_back({std::to_string(p)});
  d.summary.push_back(std::string("disjoint: ") + (r.disjoint ? "yes" : "no"));
  d.summary.push_back("translate ramification: " + to_string(r.translate_ram.poly));
  for (const auto& b : r.blocks) d.summary.push_back("block " + b.block + ": " + to_string(b.verdict.verdict));
  if (r.independence) d.summary.push_back("independence: " + to_string(r.independence->verdict));
  d.summary.push_back("witnesses <= " + std::to_string(o.bound) + ": " + std::to_string(r.scan.witnesses.size()) +
                      " of " + std::to_string(r.scan.good) + " good primes (" + rat(r.scan.density()) + ")");
  d.summary.push_back("predicted density: " + (r.predicted_density ? rat(*r.predicted_density) : std::string("absent")));
  return d;
}

inline ReportDoc run_chebotarev(const ChebotarevOptions& o, ScanCache* cache = nullptr) {
  ReportDoc d;
  d.command = "chebotarev";
  d.config = {{"poly", o.poly}, {"bound", o.bound}, {"tol", o.tol}};
  const UniPoly f = parse_univariate(o.poly);
  const Rational tol = parse_rational(o.tol);
  const unsigned k = static_cast<unsigned>(std::max(f.degree(), 0));
  auto sample = [&] { return to_json(sample_cycle_types(f, o.bound)); };
  const json table = cache ? cache->get_or_compute("cycle-types", to_string(f, "X"), o.bound, sample) : sample();
  const FreqTable t = freq_table_from_json(table);
  d.payload["table"] = table;
  d.payload["poly"] = to_string(f, "X");
  d.table = {{"cycle_type", "count", "frequency", "expected"}};
  if (k <= kMaxSymmetricDegree) {
    const auto expected = expected_cycle_distribution(k);
    json exp = json::object();
    for (const auto& [c, q] : expected) {
      exp[c.str()] = rat(q);
      d.table.push_back({c.str(), std::to_string(t.count(c)), rat(t.frequency(c)), rat(q)});
    }
    d.payload["expected"] = exp;
    const GroupVerdict v = certify_symmetric_group(f, t, tol);
    d.payload["verdict"] = to_json(v);
    d.inconclusive = v.verdict == Verdict::Inconclusive;
    d.summary.push_back("TV distance to S_" + std::to_string(k) + ": " + rat(v.tv_distance) + " (tol " + rat(tol) + ")");
    d.summary.push_back("verdict: " + to_string(v.verdict) + (v.witness.empty() ? "" : " - " + v.witness));
  } else {
    d.payload["expected"] = nullptr;
    d.payload["verdict"] = nullptr;
    d.inconclusive = true;
    for (const auto& [c, n] : t.counts) d.table.push_back({c.str(), std::to_string(n), rat(t.frequency(c)), ""});
    d.summary.push_back("degree above " + std::to_string(kMaxSymmetricDegree) + ": no S_k comparison");
  }
  d.summary.push_back(std::to_string(t.total) + " good primes, " + std::to_string(t.bad) + " bad");
  return d;
}

inline ReportDoc run_density_g(const DensityGOptions& o) {
  ReportDoc d;
  d.command = "density-g";
  d.config = {{"cover", detail::opt(o.cover)},  {"f2_cover", detail::opt(o.f2_cover)},
              {"ram", detail::opt(o.ram)},      {"f2", detail::opt(o.f2)},
              {"k", o.k},                       {"heights", o.heights},
              {"bound", o.bound},               {"mode", o.mode},
              {"samples", o.samples},           {"seed", o.seed},
              {"budget", o.budget},             {"jobs", o.jobs},
              {"exact_degree", o.exact_degree}};
  DensityOptions opt;
  if (o.mode == "exhaustive")
    opt.mode = SamplingMode::Exhaustive;
  else if (o.mode == "mc")
    opt.mode = SamplingMode::MonteCarlo;
  else
    throw std::invalid_argument("density-g: mode must be exhaustive or mc");
  opt.samples = o.samples;
  opt.seed = o.seed;
  opt.budget = o.budget;
  opt.jobs = o.jobs;
  opt.exact_degree = o.exact_degree;
  if (o.heights.empty()) throw std::invalid_argument("density-g: no heights given");
  const CoverSpec f = detail::cover_spec(o.cover, o.ram, "density-g (cover)");
  const CoverSpec f2 = detail::cover_spec(o.f2_cover, o.f2, "density-g (reference)");
  const DensityCurve c = density_over_g(f, f2, o.k, o.heights, o.bound, opt);
  d.payload = to_json(c);
  d.table = density_table(c);
  for (const auto& r : c.rows)
    d.summary.push_back("H=" + std::to_string(r.height) + ": " + std::to_string(r.witness_bearing) + "/" +
                        std::to_string(r.valid) + " valid g witness-bearing (" + rat(r.fraction()) + ")");
  return d;
}

inline ReportDoc run_c2_compare(const C2CompareOptions& o) {
  ReportDoc d;
  d.command = "c2 compare";
  d.config = {{"h1", o.h1}, {"h2", o.h2}, {"height", o.height}};
  const C2Comparison c = compare_specialization_sets(parse_univariate(o.h1, "t"), parse_univariate(o.h2, "t"), o.height);
  d.payload = to_json(c);
  d.table = {{"kernel", "side", "t0_h1", "t0_h2"}};
  auto witness = [](const SpecializationSet& s, const Integer& k) {
    auto it = s.kernels.find(k);
    return it == s.kernels.end() ? std::string() : point_string(it->second);
  };
  for (const auto& k : c.only_in_1) d.table.push_back({k.get_str(), "only_in_1", witness(c.first, k), ""});
  for (const auto& k : c.only_in_2) d.table.push_back({k.get_str(), "only_in_2", "", witness(c.second, k)});
  for (const auto& k : c.common) d.table.push_back({k.get_str(), "common", witness(c.first, k), witness(c.second, k)});
  d.summary = {std::to_string(c.common.size()) + " common kernels",
               std::to_string(c.only_in_1.size()) + " only for h1, " + std::to_string(c.only_in_2.size()) + " only for h2",
               "differences are relative to the height-" + std::to_string(o.height) + " search box"};
  return d;
}

inline ReportDoc run_c2_realize(const C2RealizeOptions& o) {
  ReportDoc d;
  d.command = "c2 realize";
  d.config = {{"d", o.d}, {"m", o.m}};
  const Integer dk = parse_integer(o.d);
  const Rational m = parse_rational(o.m);
  const Rational s0 = c2_realize(dk, m);
  const Rational value = s0 * s0 - 1;
  d.payload = {{"d", dk.get_str()}, {"m", rat(m)}, {"s0", rat(s0)}, {"s0_squared_minus_1", rat(value)},
               {"kernel", squarefree_kernel(value).d.get_str()}, {"verified", true}};
  d.table = {{"d", "m", "s0"}, {dk.get_str(), rat(m), rat(s0)}};
  d.summary = {"s0 = " + s0.get_str(), "s0^2 - 1 = " + value.get_str() + ", kernel " + dk.get_str()};
  return d;
}

}  // namespace ramex
