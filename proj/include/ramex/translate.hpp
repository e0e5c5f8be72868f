#pragma once

/**
 * @file translate.hpp
 * @brief Ramification polynomials of covers and of their rational translates.
 *
 * Pipeline: a cover F|Q(t) gives a ramification polynomial f (a squarefree
 * binary form whose projective roots are the branch points). Translating by
 * g = g1/g2 pulls the branch locus back along g, so the translate's
 * ramification polynomial is the radical of f(G1, G2). A witness prime p is
 * one where a reference ramification polynomial f2 splits completely but
 * the translate has no projective root mod p.
 *
 * Everything stays projective: a root at (1:0) is an ordinary root, so a
 * translate with a branch point at infinity can never produce witnesses.
 */

#include "ramex/algebra.hpp"
#include "ramex/chebotarev.hpp"
#include "ramex/forms.hpp"
#include "ramex/integer.hpp"
#include "ramex/modp.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

namespace ramex {

enum class Provenance { User, DiscriminantRadical };

inline std::string to_string(Provenance p) {
  return p == Provenance::User ? "USER" : "DISCRIMINANT-RADICAL";
}

/// A cover F|Q(t), given either by a defining polynomial f(t, X) or by an
/// exact ramification polynomial.
struct CoverSpec {
  std::variant<BiPolyT, BiPolyHom> data;
  std::string label;

  static CoverSpec defining(BiPolyT f, std::string label = {}) { return {std::move(f), std::move(label)}; }
  static CoverSpec ramification(BiPolyHom h, std::string label = {}) { return {std::move(h), std::move(label)}; }
  bool is_defining() const { return std::holds_alternative<BiPolyT>(data); }
};

struct RamificationPolynomial {
  BiPolyHom poly;  // squarefree, primitive
  bool has_infinity = false;
  Provenance provenance = Provenance::User;
  // The root set may be strictly larger than the true branch locus.
  bool superset = false;
};

inline RamificationPolynomial make_ramification(const BiPolyHom& h, Provenance prov, bool superset) {
  if (h.is_zero()) throw std::invalid_argument("ramification polynomial must be nonzero");
  RamificationPolynomial r;
  r.poly = projective_radical(h);
  r.has_infinity = r.poly.has_infinity_root();
  r.provenance = prov;
  r.superset = superset;
  return r;
}

namespace detail {

// X-monic model of f(t, X): substituting X = Z / a_n(t) and scaling by
// a_n^(n-1) gives Z^n + sum a_i a_n^(n-1-i) Z^i over Z[t].
inline BiPolyT monic_model(const BiPolyT& f) {
  const int n = f.degree();
  const UniPoly& an = f.lc();
  std::vector<UniPoly> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = f.coeffs()[static_cast<std::size_t>(i)] * an.pow(static_cast<unsigned>(n - 1 - i));
  c[static_cast<std::size_t>(n)] = UniPoly{1};
  return BiPolyT(std::move(c));
}

// For a monic model M(t, Z), the model at t = 1/u: W = Z * u^e with e the
// least integer making every coefficient polynomial in u. Returns the
// discriminant's value at u = 0 (zero means infinity is a branch candidate).
inline Integer discriminant_at_infinity(const BiPolyT& monic) {
  const int n = monic.degree();
  unsigned e = 0;
  for (int i = 0; i < n; ++i) {
    const int d = monic.coeffs()[static_cast<std::size_t>(i)].degree();
    if (d <= 0) continue;
    const unsigned span = static_cast<unsigned>(n - i);
    e = std::max(e, (static_cast<unsigned>(d) + span - 1) / span);
  }
  if (e == 0) return 1;  // no t at all: unramified everywhere
  std::vector<UniPoly> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    const UniPoly& ci = monic.coeffs()[static_cast<std::size_t>(i)];
    const unsigned top = static_cast<unsigned>(n - i) * e;
    std::vector<Integer> rev(top + 1, Integer(0));
    for (int j = 0; j <= ci.degree(); ++j) rev[top - static_cast<unsigned>(j)] = ci.coeffs()[static_cast<std::size_t>(j)];
    c[static_cast<std::size_t>(i)] = UniPoly(rev);
  }
  c[static_cast<std::size_t>(n)] = UniPoly{1};
  return discriminant_in_x(BiPolyT(std::move(c))).coeff(0);
}

}  // namespace detail

/// Ramification polynomial of a cover. USER input is authoritative; a
/// defining polynomial yields the discriminant-radical candidate locus
/// (flagged as a possible superset of the true branch locus).
inline RamificationPolynomial ramification_from_cover(const CoverSpec& cover) {
  if (const auto* h = std::get_if<BiPolyHom>(&cover.data)) return make_ramification(*h, Provenance::User, false);
  const BiPolyT& f = std::get<BiPolyT>(cover.data);
  if (f.degree() < 2) throw std::invalid_argument("defining polynomial needs X-degree >= 2");
  const BiPolyT monic = detail::monic_model(f);
  const UniPoly disc = discriminant_in_x(monic);
  if (disc.is_zero()) throw std::invalid_argument("defining polynomial is inseparable (zero discriminant)");
  const UniPoly finite = disc.degree() >= 1 ? radical(disc) : UniPoly{1};
  const bool at_infinity = detail::discriminant_at_infinity(monic) == 0;
  const unsigned deg = static_cast<unsigned>(finite.degree()) + (at_infinity ? 1u : 0u);
  return make_ramification(homogenize(finite, deg), Provenance::DiscriminantRadical, true);
}

/// No branch point of the cover X -> g(X) lies on a root of f.
inline bool branch_locus_disjoint(const RamificationPolynomial& f, const RatFunc& g) {
  return form_resultant(branch_form(g), f.poly) != 0;
}

/// g in lowest terms with k set to its actual degree.
inline RatFunc reduced(const RatFunc& g) {
  auto n = normalize(g);
  if (!n) throw std::invalid_argument("invalid rational function (zero denominator or constant)");
  n->k = n->degree();
  return *n;
}

/// Radical of f(G1, G2): the translate's ramification polynomial. Exact when
/// the branch loci are disjoint; flagged as a superset otherwise.
inline RamificationPolynomial translate_ramification(const RamificationPolynomial& f, const RatFunc& g) {
  const RatFunc r = reduced(g);
  const BiPolyHom comp = compose_homogeneous(f.poly, r).primitive();
  RamificationPolynomial out = make_ramification(comp, f.provenance, f.superset);
  if (!branch_locus_disjoint(f, r) || out.poly.degree() < comp.degree()) out.superset = true;
  return out;
}

// ---------------------------------------------------------------------------
// Witness primes.

/// Primes good for the witness scan: f2 must have a well-defined splitting
/// type (content and projective discriminant), m2 must not vanish.
class WitnessPrimeFilter {
 public:
  WitnessPrimeFilter(const RamificationPolynomial& f2, const RamificationPolynomial& m2)
      : f2_good_(f2.poly), m2_content_(m2.poly.content()) {}
  bool operator()(u64 p) const { return f2_good_(p) && mod_u64(m2_content_, p) != 0; }

 private:
  GoodPrimeTest f2_good_;
  Integer m2_content_;
};

inline bool is_witness(const RamificationPolynomial& f2, const RamificationPolynomial& m2, u64 p) {
  return count_projective_roots(m2.poly, p) == 0 && splits_completely(f2.poly, p);
}

struct WitnessScan {
  std::vector<u64> witnesses;  // ascending
  std::uint64_t good = 0;
  std::uint64_t bad = 0;
  u64 bound = 0;
  Rational density() const {
    if (good == 0) return 0;
    return make_rational(Integer(static_cast<unsigned long>(witnesses.size())), Integer(static_cast<unsigned long>(good)));
  }
};

/// Good primes p <= bound with f2 split completely and m2 rootless mod p.
inline WitnessScan find_witness_primes(const RamificationPolynomial& f2, const RamificationPolynomial& m2,
                                       const std::vector<u64>& primes, u64 bound) {
  WitnessScan s;
  s.bound = bound;
  const WitnessPrimeFilter good(f2, m2);
  for (u64 p : primes) {
    if (p > bound) break;
    if (!good(p)) {
      ++s.bad;
      continue;
    }
    ++s.good;
    if (is_witness(f2, m2, p)) s.witnesses.push_back(p);
  }
  return s;
}

inline WitnessScan find_witness_primes(const RamificationPolynomial& f2, const RamificationPolynomial& m2, u64 bound) {
  return find_witness_primes(f2, m2, primes_up_to(bound), bound);
}

/// First witness prime <= bound, if any.
inline std::optional<u64> first_witness(const RamificationPolynomial& f2, const RamificationPolynomial& m2,
                                        const std::vector<u64>& primes, u64 bound) {
  const WitnessPrimeFilter good(f2, m2);
  for (u64 p : primes) {
    if (p > bound) break;
    if (good(p) && is_witness(f2, m2, p)) return p;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// The end-to-end report.

struct BlockVerdict {
  std::string block;  // text of h_j o g
  std::string root;   // rational branch point of f it comes from ("" in single-block mode)
  GroupVerdict verdict;
};

struct WitnessReport {
  RamificationPolynomial cover_ram;
  RamificationPolynomial reference_ram;
  RatFunc g;  // reduced
  bool disjoint = false;
  RamificationPolynomial translate_ram;
  bool blockwise = false;
  std::vector<BlockVerdict> blocks;
  std::optional<GroupVerdict> independence;
  WitnessScan scan;
  std::optional<Rational> predicted_density;
  u64 bound = 0;
  Rational tol = 0;
  u64 seed = 0;
  std::vector<std::string> notes;
};

inline GroupVerdict certify_symmetric_form(const BiPolyHom& block, const Rational& tol, u64 bound) {
  const unsigned k = block.degree();
  GroupVerdict v;
  v.threshold = tol;
  if (!is_squarefree_form(block)) {
    v.verdict = Verdict::Inconclusive;
    v.notes.push_back("block is not squarefree");
    return v;
  }
  try {
    const auto roots = rational_projective_roots(block);
    if (!roots.empty() && k >= 2) {
      v.verdict = Verdict::Inconsistent;
      v.witness = "rational root " + to_string(roots.front()) + " is fixed by every Frobenius";
      return v;
    }
  } catch (const std::domain_error&) {
  }
  return certify_symmetric_group(sample_cycle_types(block, bound), k, tol);
}

/// Assembles disjointness, the translate's ramification polynomial, group
/// certification, witness primes and the empirical/predicted densities.
/// Partial failures are recorded in notes instead of aborting.
using WitnessScanner = std::function<WitnessScan(const RamificationPolynomial&, const RamificationPolynomial&, u64)>;

inline WitnessReport nonparametricity_report(const CoverSpec& cover, const CoverSpec& reference, const RatFunc& g,
                                             u64 bound, const Rational& tol, u64 seed, const WitnessScanner& scanner = {}) {
  WitnessReport r;
  r.bound = bound;
  r.tol = tol;
  r.seed = seed;
  r.cover_ram = ramification_from_cover(cover);
  r.reference_ram = ramification_from_cover(reference);
  r.g = reduced(g);
  r.disjoint = branch_locus_disjoint(r.cover_ram, r.g);
  r.translate_ram = translate_ramification(r.cover_ram, r.g);
  if (r.reference_ram.superset)
    r.notes.push_back("reference ramification polynomial is a discriminant-radical candidate; witnesses assume it is exact");
  if (r.cover_ram.superset)
    r.notes.push_back("cover ramification polynomial is a candidate superset; a superset only makes the no-root condition harder");
  if (!r.disjoint) r.notes.push_back("branch loci are not disjoint; translate ramification polynomial is a superset");

  const unsigned n = r.g.degree();
  std::vector<ProjectivePoint> roots;
  bool rational_f = false;
  try {
    roots = rational_projective_roots(r.cover_ram.poly);
    rational_f = roots.size() == r.cover_ram.poly.degree();
  } catch (const std::domain_error& e) {
    r.notes.push_back(std::string("rational root search failed: ") + e.what());
  }

  bool any_inconsistent = false;
  if (rational_f) {
    r.blockwise = true;
    std::vector<BiPolyHom> blocks;
    for (const auto& root : roots) {
      const BiPolyHom block = compose_homogeneous(linear_form(root), r.g).primitive();
      blocks.push_back(block);
      GroupVerdict v = certify_symmetric_form(block, tol, bound);
      any_inconsistent = any_inconsistent || v.verdict == Verdict::Inconsistent;
      r.blocks.push_back({to_string(block), to_string(root), std::move(v)});
    }
    bool blocks_ok = blocks.size() >= 2;
    for (const auto& b : blocks) blocks_ok = blocks_ok && is_squarefree_form(b);
    if (blocks_ok) {
      try {
        r.independence = test_block_independence(blocks, bound, tol);
        any_inconsistent = any_inconsistent || r.independence->verdict == Verdict::Inconsistent;
      } catch (const std::invalid_argument& e) {
        r.notes.push_back(std::string("independence test skipped: ") + e.what());
      }
    }
  } else {
    r.notes.push_back("branch points are not all rational; single-block mode, no exact prediction");
    GroupVerdict v;
    v.threshold = tol;
    try {
      const auto troots = rational_projective_roots(r.translate_ram.poly);
      if (!troots.empty()) {
        v.verdict = Verdict::Inconsistent;
        v.witness = "translate has rational root " + to_string(troots.front());
        any_inconsistent = true;
      } else {
        v.notes.push_back("no rational root; group over the splitting field not certified");
      }
    } catch (const std::domain_error& e) {
      v.notes.push_back(e.what());
    }
    r.blocks.push_back({to_string(r.translate_ram.poly), "", std::move(v)});
  }
  r.notes.push_back("group checks are statistical and over Q; the product structure is asserted over the splitting field of f*f2");

  r.scan = scanner ? scanner(r.reference_ram, r.translate_ram, bound)
                  : find_witness_primes(r.reference_ram, r.translate_ram, bound);

  bool rational_f2 = false;
  try {
    rational_f2 = splits_over_rationals(r.reference_ram.poly);
  } catch (const std::domain_error&) {
  }
  if (rational_f && rational_f2 && r.disjoint && !any_inconsistent && n >= 1)
    r.predicted_density = predicted_no_root_density(n, r.cover_ram.poly.degree());
  if (r.scan.witnesses.empty()) r.notes.push_back("INCONCLUSIVE: no witness prime up to the bound");
  return r;
}

// ---------------------------------------------------------------------------
// Height-bounded families of rational functions.

struct EnumeratedRatFunc {
  std::uint64_t index = 0;
  RatFunc raw;
  bool valid = false;
};

/// All pairs (g1, g2) in V_k x V_k with height <= H, in lexicographic order
/// of the coefficient tuple (g1_0..g1_k, g2_0..g2_k), each in [-H, H], the
/// last entry varying fastest.
class RationalFunctionBox {
 public:
  RationalFunctionBox(unsigned k, unsigned height, bool exact_degree = false)
      : k_(k), height_(height), exact_degree_(exact_degree) {
    if (k < 1 || height < 1) throw std::invalid_argument("enumeration needs k >= 1 and H >= 1");
    const unsigned __int128 base = 2u * static_cast<unsigned __int128>(height) + 1;
    unsigned __int128 size = 1;
    for (unsigned i = 0; i < 2 * k + 2; ++i) {
      size *= base;
      if (size > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("enumeration box too large");
    }
    size_ = static_cast<std::uint64_t>(size);
  }

  std::uint64_t size() const { return size_; }
  unsigned k() const { return k_; }
  unsigned height() const { return height_; }

  EnumeratedRatFunc at(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("enumeration index");
    const std::uint64_t base = 2ull * height_ + 1;
    std::vector<long> digits(2 * k_ + 2);
    std::uint64_t rest = index;
    for (std::size_t i = digits.size(); i-- > 0;) {
      digits[i] = static_cast<long>(rest % base) - static_cast<long>(height_);
      rest /= base;
    }
    std::vector<Integer> a(digits.begin(), digits.begin() + k_ + 1), b(digits.begin() + k_ + 1, digits.end());
    EnumeratedRatFunc e{index, RatFunc{UniPoly(a), UniPoly(b), k_}, false};
    e.valid = is_valid(e.raw);
    if (e.valid && exact_degree_)
      e.valid = e.raw.g1.degree() == static_cast<int>(k_) && e.raw.g2.degree() == static_cast<int>(k_) &&
                reduced(e.raw).degree() == k_;
    return e;
  }

  class iterator {
   public:
    iterator(const RationalFunctionBox* box, std::uint64_t i) : box_(box), i_(i) {}
    EnumeratedRatFunc operator*() const { return box_->at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    bool operator!=(const iterator& o) const { return i_ != o.i_; }

   private:
    const RationalFunctionBox* box_;
    std::uint64_t i_;
  };
  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size_); }

 private:
  unsigned k_;
  unsigned height_;
  bool exact_degree_;
  std::uint64_t size_ = 0;
};

inline RationalFunctionBox enumerate_rational_functions(unsigned k, unsigned height, bool exact_degree = false) {
  return RationalFunctionBox(k, height, exact_degree);
}

enum class SamplingMode { Exhaustive, MonteCarlo };

struct DensityOptions {
  SamplingMode mode = SamplingMode::Exhaustive;
  std::uint64_t samples = 10000;
  u64 seed = 0;
  std::uint64_t budget = 1000000;
  unsigned jobs = 1;
  bool exact_degree = false;
};

struct DensityRow {
  unsigned height = 0;
  std::uint64_t total = 0;
  std::uint64_t valid = 0;
  std::uint64_t disjoint = 0;
  std::uint64_t witness_bearing = 0;
  Rational fraction() const {
    if (valid == 0) return 0;
    return make_rational(Integer(static_cast<unsigned long>(witness_bearing)), Integer(static_cast<unsigned long>(valid)));
  }
};

struct DensityCurve {
  std::vector<DensityRow> rows;
  DensityOptions options;
  unsigned k = 0;
  u64 bound = 0;
};

/// Outcome for one g: 0 invalid, 1 valid, 2 valid and disjoint,
/// 3 valid, disjoint and witness-bearing.
inline int classify_translate(const RamificationPolynomial& f, const RamificationPolynomial& f2, const EnumeratedRatFunc& e,
                              const std::vector<u64>& primes, u64 bound) {
  if (!e.valid) return 0;
  const RatFunc g = reduced(e.raw);
  if (!branch_locus_disjoint(f, g)) return 1;
  const RamificationPolynomial m2 = translate_ramification(f, g);
  // A rational root reduces to a root mod every p: no scan needed.
  try {
    if (!rational_projective_roots(m2.poly).empty()) return 2;
  } catch (const std::domain_error&) {
  }
  return first_witness(f2, m2, primes, bound) ? 3 : 2;
}

/// Monte-Carlo sample indices for one height; depends only on (seed, H).
inline std::vector<std::uint64_t> sample_indices(std::uint64_t box_size, std::uint64_t samples, u64 seed, unsigned height) {
  std::mt19937_64 rng(detail::splitmix64(seed ^ detail::splitmix64(height)));
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % box_size;
  std::vector<std::uint64_t> out(samples);
  for (auto& idx : out) {
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    idx = x % box_size;
  }
  return out;
}

/// Empirical witness-bearing fraction of valid g over height-bounded boxes.
inline DensityCurve density_over_g(const CoverSpec& cover, const CoverSpec& reference, unsigned k,
                                   const std::vector<unsigned>& heights, u64 bound, const DensityOptions& opt) {
  if (bound < 1000) throw std::invalid_argument("density_over_g: bound must be >= 1000");
  const RamificationPolynomial f = ramification_from_cover(cover);
  const RamificationPolynomial f2 = ramification_from_cover(reference);
  const std::vector<u64> primes = primes_up_to(bound);
  DensityCurve curve;
  curve.options = opt;
  curve.k = k;
  curve.bound = bound;
  for (unsigned h : heights) {
    const RationalFunctionBox box(k, h, opt.exact_degree);
    std::vector<std::uint64_t> indices;
    std::uint64_t count;
    if (opt.mode == SamplingMode::Exhaustive) {
      if (box.size() > opt.budget)
        throw std::length_error("exhaustive enumeration of " + std::to_string(box.size()) + " pairs exceeds budget " +
                                std::to_string(opt.budget));
      count = box.size();
    } else {
      indices = sample_indices(box.size(), opt.samples, opt.seed, h);
      count = indices.size();
    }
    std::vector<unsigned char> outcome(count, 0);
    const unsigned jobs = std::max(1u, opt.jobs);
    auto worker = [&](unsigned w) {
      for (std::uint64_t i = w; i < count; i += jobs) {
        const std::uint64_t idx = indices.empty() ? i : indices[i];
        outcome[i] = static_cast<unsigned char>(classify_translate(f, f2, box.at(idx), primes, bound));
      }
    };
    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
      for (auto& t : pool) t.join();
    }
    DensityRow row;
    row.height = h;
    row.total = count;
    for (unsigned char o : outcome) {
      row.valid += o >= 1;
      row.disjoint += o >= 2;
      row.witness_bearing += o == 3;
    }
    curve.rows.push_back(row);
  }
  return curve;
}

}  // namespace ramex
