// ramex: command-line front end. Exit codes: 0 success, 2 inconclusive
// (e.g. no witness prime up to the bound), 1 error.

#include "ramex/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>

using namespace ramex;

int main(int argc, char** argv) {
  CLI::App app{"ramex - ramification polynomials, witness primes and Frobenius statistics"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json", output, cache_dir;
  unsigned jobs = 1;
  bool use_cache = false, timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("-o,--output", output, "Write the report to a file instead of stdout");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--cache", use_cache, "Use the on-disk scan cache (RAMEX_CACHE_DIR)");
  app.add_option("--cache-dir", cache_dir, "Cache directory (implies --cache)");
  app.add_flag("--timing", timing, "Include wall-clock timing (the report is then not byte-reproducible)");

  RamifyOptions ramify;
  auto* c_ramify = app.add_subcommand("ramify", "Ramification polynomial of a cover");
  c_ramify->add_option("--cover", ramify.cover, "Defining polynomial f(t, X)");
  c_ramify->add_option("--ram", ramify.ram, "Exact ramification polynomial in X, Y");

  TranslateOptions translate;
  auto* c_translate = app.add_subcommand("translate", "Ramification polynomial of the translate by g = g1/g2");
  c_translate->add_option("--ram", translate.ram, "Ramification polynomial of the cover")->required();
  c_translate->add_option("--g1", translate.g1, "Numerator of g (in X)")->required();
  c_translate->add_option("--g2", translate.g2, "Denominator of g (in X)")->required();
  c_translate->add_option("--k", translate.k, "Degree bound for g (default: its degree)");

  WitnessOptions witness;
  auto* c_witness = app.add_subcommand("witness", "Witness primes and the full report");
  c_witness->add_option("--f2", witness.f2, "Reference ramification polynomial")->required();
  c_witness->add_option("--ram", witness.ram, "Ramification polynomial of the cover")->required();
  c_witness->add_option("--g1", witness.g1, "Numerator of g")->required();
  c_witness->add_option("--g2", witness.g2, "Denominator of g")->required();
  c_witness->add_option("--bound", witness.bound, "Prime bound B")->required();
  c_witness->add_option("--tol", witness.tol, "TV-distance tolerance (rational)")->capture_default_str();
  c_witness->add_option("--seed", witness.seed, "Seed (echoed; results do not depend on it)")->capture_default_str();
  c_witness->add_option("--k", witness.k, "Degree bound for g");

  ChebotarevOptions cheb;
  auto* c_cheb = app.add_subcommand("chebotarev", "Frobenius cycle-type frequencies against S_k");
  c_cheb->add_option("--poly", cheb.poly, "Univariate polynomial in X")->required();
  c_cheb->add_option("--bound", cheb.bound, "Prime bound B")->required();
  c_cheb->add_option("--tol", cheb.tol, "TV-distance tolerance (rational)")->capture_default_str();

  DensityGOptions dens;
  auto* c_dens = app.add_subcommand("density-g", "Witness-bearing fraction over height-bounded g");
  c_dens->add_option("--cover", dens.cover, "Defining polynomial of the cover");
  c_dens->add_option("--f2-cover", dens.f2_cover, "Defining polynomial of the reference cover");
  c_dens->add_option("--ram", dens.ram, "Exact ramification polynomial of the cover");
  c_dens->add_option("--f2", dens.f2, "Exact reference ramification polynomial");
  c_dens->add_option("--k", dens.k, "Degree bound k")->required();
  c_dens->add_option("--heights", dens.heights, "Height bounds, comma separated")->required()->delimiter(',');
  c_dens->add_option("--bound", dens.bound, "Prime bound B")->required();
  c_dens->add_option("--mode", dens.mode, "exhaustive or mc")->capture_default_str()->check(CLI::IsMember({"exhaustive", "mc"}));
  c_dens->add_option("--samples", dens.samples, "Monte-Carlo samples per height")->capture_default_str();
  c_dens->add_option("--seed", dens.seed, "Monte-Carlo seed")->capture_default_str();
  c_dens->add_option("--budget", dens.budget, "Largest exhaustive box")->capture_default_str();
  c_dens->add_flag("--exact-degree", dens.exact_degree, "Only count g of exact degree k");

  auto* c_c2 = app.add_subcommand("c2", "Quadratic specializations");
  c_c2->require_subcommand(1);
  C2CompareOptions cmp;
  auto* c_cmp = c_c2->add_subcommand("compare", "Compare specialization kernels of X^2 - h1(t) and X^2 - h2(t)");
  c_cmp->add_option("--h1", cmp.h1, "h1(t)")->required();
  c_cmp->add_option("--h2", cmp.h2, "h2(t)")->required();
  c_cmp->add_option("--height", cmp.height, "Height bound for t0")->required();
  C2RealizeOptions real;
  auto* c_real = c_c2->add_subcommand("realize", "An s0 with s0^2 - 1 of squarefree kernel d");
  c_real->add_option("--d", real.d, "Squarefree d != 1")->required();
  c_real->add_option("--m", real.m, "Nonzero rational parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    std::unique_ptr<ScanCache> cache;
    if (use_cache || !cache_dir.empty()) cache = std::make_unique<ScanCache>(cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir));

    ReportDoc doc;
    if (*c_ramify) doc = run_ramify(ramify);
    else if (*c_translate) doc = run_translate(translate);
    else if (*c_witness) doc = run_witness(witness, cache.get());
    else if (*c_cheb) doc = run_chebotarev(cheb, cache.get());
    else if (*c_dens) {
      dens.jobs = jobs;
      doc = run_density_g(dens);
    } else if (*c_cmp) doc = run_c2_compare(cmp);
    else if (*c_real) doc = run_c2_realize(real);

    if (timing) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      doc.timing = json{{"wall_ms", ms}, {"jobs", jobs}};
      if (cache)
        (*doc.timing)["cache"] = {{"hits", cache->stats().hits},
                                  {"misses", cache->stats().misses},
                                  {"revalidated", cache->stats().revalidated}};
    }
    const std::string text = emit_report(doc, parse_format(format));
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output, std::ios::binary);
      out << text;
      if (!out) throw std::runtime_error("cannot write " + output);
    }
    if (doc.inconclusive) std::cerr << "ramex: INCONCLUSIVE\n";
    return doc.inconclusive ? 2 : 0;
  } catch (const ParseError& e) {
    std::cerr << "ramex: parse error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "ramex: error: " << e.what() << "\n";
  }
  return 1;
}
