#pragma once

// Frobenius statistics over prime ranges: cycle-type frequency tables,
// exact S_k class proportions, three-valued group verdicts and the exact
// fixed-point-free proportion in (S_k)^d.

#include "ramex/algebra.hpp"
#include "ramex/forms.hpp"
#include "ramex/integer.hpp"
#include "ramex/modp.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramex {

struct FreqTable {
  std::map<CycleType, std::uint64_t> counts;
  std::uint64_t total = 0;  // good primes sampled
  std::uint64_t bad = 0;    // primes skipped as bad
  std::uint64_t bound = 0;

  void add(const CycleType& c) {
    ++counts[c];
    ++total;
  }
  void merge(const FreqTable& other) {
    for (const auto& [c, n] : other.counts) counts[c] += n;
    total += other.total;
    bad += other.bad;
  }
  std::uint64_t count(const CycleType& c) const {
    auto it = counts.find(c);
    return it == counts.end() ? 0 : it->second;
  }
  Rational frequency(const CycleType& c) const {
    if (total == 0) return 0;
    return make_rational(Integer(static_cast<unsigned long>(count(c))), Integer(static_cast<unsigned long>(total)));
  }
};

using CycleTuple = std::vector<CycleType>;

struct JointFreqTable {
  std::map<CycleTuple, std::uint64_t> counts;
  std::uint64_t total = 0;
  std::uint64_t bad = 0;
  std::uint64_t bound = 0;
  std::size_t blocks = 0;

  FreqTable marginal(std::size_t i) const {
    FreqTable t;
    t.bound = bound;
    t.bad = bad;
    for (const auto& [tuple, n] : counts) {
      t.counts[tuple.at(i)] += n;
      t.total += n;
    }
    return t;
  }
};

enum class Verdict { CertifiedConsistent, Inconsistent, Inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedConsistent: return "CERTIFIED-CONSISTENT";
    case Verdict::Inconsistent: return "INCONSISTENT";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

struct GroupVerdict {
  Verdict verdict = Verdict::Inconclusive;
  Rational tv_distance = 0;
  Rational threshold = 0;
  std::uint64_t sample_size = 0;
  // Set for INCONSISTENT: what was observed that the target group rules out.
  std::string witness;
  std::vector<std::string> notes;
};

// A class with expected mass pi that is absent from n samples counts as a
// recorded inconsistency once n * pi >= this (chance below e^-20).
inline constexpr double kMissingClassEvidence = 20.0;

// ---------------------------------------------------------------------------
// Exact S_k class proportions.

inline constexpr unsigned kMaxSymmetricDegree = 12;

namespace detail {

inline void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur,
                           std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

inline Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace detail

inline std::vector<std::vector<unsigned>> partitions(unsigned k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  detail::partitions_rec(k, k, cur, out);
  return out;
}

/// Size of the conjugacy class of S_k with the given cycle type:
/// k! / prod(m^c_m * c_m!).
inline Integer class_size(const CycleType& type) {
  std::map<unsigned, unsigned> mult;
  for (unsigned part : type.parts()) ++mult[part];
  Integer denom = 1;
  for (const auto& [m, c] : mult) denom *= pow_int(Integer(m), c) * detail::factorial(c);
  return divexact(detail::factorial(type.total()), denom);
}

inline std::map<CycleType, Rational> expected_cycle_distribution(unsigned k) {
  if (k < 1 || k > kMaxSymmetricDegree) throw std::out_of_range("expected_cycle_distribution: k must be in [1, 12]");
  const Integer order = detail::factorial(k);
  std::map<CycleType, Rational> out;
  for (auto& parts : partitions(k)) {
    CycleType c(parts);
    out[c] = make_rational(class_size(c), order);
  }
  return out;
}

/// Derangements of k points by inclusion-exclusion: sum (-1)^i k!/i!.
inline Integer derangements(unsigned k) {
  Integer sum = 0;
  for (unsigned i = 0; i <= k; ++i) {
    Integer term = divexact(detail::factorial(k), detail::factorial(i));
    sum += (i % 2 ? Integer(-term) : term);
  }
  return sum;
}

/// Proportion of (S_k)^d acting without fixed points: (D_k / k!)^d.
inline Rational predicted_no_root_density(unsigned k, unsigned d) {
  if (k < 1 || k > kMaxSymmetricDegree || d < 1) throw std::out_of_range("predicted_no_root_density: need 1 <= k <= 12, d >= 1");
  return pow_rat(make_rational(derangements(k), detail::factorial(k)), d);
}

// ---------------------------------------------------------------------------
// Sampling.

/// Cycle types of f at every good prime p <= bound.
inline FreqTable sample_cycle_types(const UniPoly& f, u64 bound) {
  if (f.degree() < 1) throw std::invalid_argument("sample_cycle_types: degree must be >= 1");
  if (!is_squarefree(f)) throw std::invalid_argument("sample_cycle_types: polynomial must be squarefree");
  const GoodPrimeTest good(f);
  FreqTable t;
  t.bound = bound;
  for (u64 p : primes_up_to(bound)) {
    if (!good(p)) {
      ++t.bad;
      continue;
    }
    t.add(cycle_type(f, p));
  }
  return t;
}

inline FreqTable sample_cycle_types(const BiPolyHom& h, u64 bound) {
  if (!is_squarefree_form(h)) throw std::invalid_argument("sample_cycle_types: form must be squarefree");
  const GoodPrimeTest good(h);
  FreqTable t;
  t.bound = bound;
  for (u64 p : primes_up_to(bound)) {
    if (!good(p)) {
      ++t.bad;
      continue;
    }
    t.add(cycle_type(h, p));
  }
  return t;
}

/// Joint cycle types of several squarefree forms over primes good for all.
inline JointFreqTable joint_cycle_types(const std::vector<BiPolyHom>& blocks, u64 bound) {
  std::vector<GoodPrimeTest> good;
  for (const auto& b : blocks) {
    if (!is_squarefree_form(b)) throw std::invalid_argument("joint_cycle_types: blocks must be squarefree");
    good.emplace_back(b);
  }
  JointFreqTable t;
  t.bound = bound;
  t.blocks = blocks.size();
  for (u64 p : primes_up_to(bound)) {
    bool ok = true;
    for (const auto& g : good) ok = ok && g(p);
    if (!ok) {
      ++t.bad;
      continue;
    }
    CycleTuple tuple;
    for (const auto& b : blocks) tuple.push_back(cycle_type(b, p));
    ++t.counts[tuple];
    ++t.total;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Verdicts.

template <class Key>
Rational tv_distance(const std::map<Key, std::uint64_t>& counts, std::uint64_t total, const std::map<Key, Rational>& expected) {
  if (total == 0) return 1;
  const Rational n(static_cast<unsigned long>(total));
  Rational sum = 0;
  for (const auto& [key, pi] : expected) {
    auto it = counts.find(key);
    Rational obs = it == counts.end() ? Rational(0) : Rational(static_cast<unsigned long>(it->second)) / n;
    sum += abs(obs - pi);
  }
  for (const auto& [key, c] : counts)
    if (!expected.count(key)) sum += Rational(static_cast<unsigned long>(c)) / n;
  Rational half = sum / 2;
  half.canonicalize();
  return half;
}

inline Rational tv_distance(const FreqTable& t, const std::map<CycleType, Rational>& expected) {
  return tv_distance(t.counts, t.total, expected);
}

namespace detail {

template <class Key, class Describe>
std::optional<std::string> missing_class(const std::map<Key, std::uint64_t>& counts, std::uint64_t total,
                                         const std::map<Key, Rational>& expected, Describe describe) {
  for (const auto& [key, pi] : expected) {
    if (counts.count(key)) continue;
    if (static_cast<double>(total) * pi.get_d() >= kMissingClassEvidence)
      return "class " + describe(key) + " (expected " + rational_string(pi) + ") never observed in " +
             std::to_string(total) + " samples";
  }
  return std::nullopt;
}

// Smallest n for which the expected TV distance of an n-sample from a
// c-class distribution, at most sqrt(2c / (pi n)) / 2, is within tol / 2.
inline std::uint64_t min_samples(std::size_t classes, const Rational& tol) {
  const double t = tol.get_d();
  if (t <= 0) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::ceil(2.0 * static_cast<double>(classes) / (M_PI * t * t)));
}

inline bool has_transposition_witness(const CycleType& c) {
  unsigned twos = 0;
  for (unsigned x : c.parts()) {
    if (x == 2) ++twos;
    else if (x % 2 == 0) return false;
  }
  return twos == 1;
}

}  // namespace detail

/// Statistical check that a frequency table is consistent with Gal = S_k.
inline GroupVerdict certify_symmetric_group(const FreqTable& t, unsigned k, const Rational& tol) {
  const auto expected = expected_cycle_distribution(k);
  GroupVerdict v;
  v.threshold = tol;
  v.sample_size = t.total;
  v.tv_distance = tv_distance(t, expected);
  for (const auto& [c, n] : t.counts) {
    if (c.total() != k) {
      v.verdict = Verdict::Inconsistent;
      v.witness = "cycle type " + c.str() + " does not have degree " + std::to_string(k);
      return v;
    }
  }
  if (auto miss = detail::missing_class(t.counts, t.total, expected, [](const CycleType& c) { return "{" + c.str() + "}"; })) {
    v.verdict = Verdict::Inconsistent;
    v.witness = *miss;
    return v;
  }
  // Transitivity from a k-cycle; a type {2, odd, ...} powers to a
  // transposition; for k >= 4 a (k-1)-cycle completes the generation
  // certificate for S_k.
  bool k_cycle = false, transposition = k < 3, k1_cycle = k < 4;
  for (const auto& [c, n] : t.counts) {
    if (c.parts() == std::vector<unsigned>{k}) k_cycle = true;
    if (detail::has_transposition_witness(c)) transposition = true;
    if (k >= 4 && c.parts() == std::vector<unsigned>{1, k - 1}) k1_cycle = true;
  }
  if (k == 1) k_cycle = true;
  if (!k_cycle) v.notes.push_back("no " + std::to_string(k) + "-cycle observed");
  if (!transposition) v.notes.push_back("no transposition witness observed");
  if (!k1_cycle) v.notes.push_back("no " + std::to_string(k - 1) + "-cycle observed");
  const std::uint64_t need = detail::min_samples(expected.size(), tol);
  if (t.total < need) v.notes.push_back("sample too small for this tolerance (" + std::to_string(t.total) + " < " + std::to_string(need) + ")");
  const bool generated = k_cycle && transposition && k1_cycle;
  v.verdict = (generated && v.tv_distance <= tol && t.total >= need) ? Verdict::CertifiedConsistent : Verdict::Inconclusive;
  return v;
}

/// As above, for a table already sampled from f; adds the exact
/// rational-root check (a rational root rules out transitivity).
inline GroupVerdict certify_symmetric_group(const UniPoly& f, const FreqTable& t, const Rational& tol) {
  const unsigned k = static_cast<unsigned>(f.degree());
  if (k >= 2) {
    try {
      const auto roots = rational_roots(f);
      if (!roots.empty()) {
        GroupVerdict v;
        v.verdict = Verdict::Inconsistent;
        v.threshold = tol;
        v.witness = "rational root " + roots.front().get_str() + " is fixed by every Frobenius";
        // the observed distance is still reported for the record
        v.sample_size = t.total;
        v.tv_distance = tv_distance(t, expected_cycle_distribution(k));
        return v;
      }
    } catch (const std::domain_error&) {
      // coefficients too large for divisor search; rely on sampling
    }
  }
  return certify_symmetric_group(t, k, tol);
}

inline GroupVerdict certify_symmetric_group(const UniPoly& f, unsigned k, u64 bound, const Rational& tol) {
  if (f.degree() != static_cast<int>(k)) throw std::invalid_argument("certify_symmetric_group: degree mismatch");
  return certify_symmetric_group(f, sample_cycle_types(f, bound), tol);
}

/// Product of per-block S_{k_i} distributions over cycle-type tuples.
inline std::map<CycleTuple, Rational> expected_product_distribution(const std::vector<unsigned>& degrees) {
  std::map<CycleTuple, Rational> acc{{CycleTuple{}, Rational(1)}};
  for (unsigned k : degrees) {
    std::map<CycleTuple, Rational> next;
    for (const auto& [tuple, w] : acc)
      for (const auto& [c, pi] : expected_cycle_distribution(k)) {
        CycleTuple t = tuple;
        t.push_back(c);
        next[t] = w * pi;
      }
    acc = std::move(next);
  }
  return acc;
}

inline std::string tuple_string(const CycleTuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "|" : "") + t[i].str();
  return s + ")";
}

inline GroupVerdict independence_verdict(const JointFreqTable& t, const std::vector<unsigned>& degrees, const Rational& tol) {
  const auto expected = expected_product_distribution(degrees);
  GroupVerdict v;
  v.threshold = tol;
  v.sample_size = t.total;
  v.tv_distance = tv_distance(t.counts, t.total, expected);
  if (auto miss = detail::missing_class(t.counts, t.total, expected, tuple_string)) {
    v.verdict = Verdict::Inconsistent;
    v.witness = *miss;
    return v;
  }
  const std::uint64_t need = detail::min_samples(expected.size(), tol);
  if (t.total < need) v.notes.push_back("sample too small for this tolerance (" + std::to_string(t.total) + " < " + std::to_string(need) + ")");
  v.verdict = (t.total >= need && v.tv_distance <= tol) ? Verdict::CertifiedConsistent : Verdict::Inconclusive;
  return v;
}

/// Joint Frobenius statistics of several blocks against the product of
/// independent symmetric groups.
inline GroupVerdict test_block_independence(const std::vector<BiPolyHom>& blocks, u64 bound, const Rational& tol) {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (form_resultant(blocks[i], blocks[j]) == 0)
        throw std::invalid_argument("test_block_independence: blocks " + std::to_string(i) + " and " + std::to_string(j) +
                                    " share a root");
  std::vector<unsigned> degrees;
  for (const auto& b : blocks) degrees.push_back(b.degree());
  return independence_verdict(joint_cycle_types(blocks, bound), degrees, tol);
}

inline GroupVerdict test_block_independence(const std::vector<UniPoly>& blocks, u64 bound, const Rational& tol) {
  std::vector<BiPolyHom> forms;
  for (const auto& b : blocks) forms.push_back(homogenize(b, static_cast<unsigned>(b.degree())));
  return test_block_independence(forms, bound, tol);
}

// ---------------------------------------------------------------------------

struct EventDensity {
  std::uint64_t hits = 0;
  std::uint64_t good = 0;
  Rational density = 0;
};

/// Fraction of good primes p <= bound satisfying the event.
template <class Event, class Good>
EventDensity empirical_event_density(Event&& event, u64 bound, Good&& good) {
  if (bound < 100) throw std::invalid_argument("empirical_event_density: bound must be >= 100");
  EventDensity out;
  for (u64 p : primes_up_to(bound)) {
    if (!good(p)) continue;
    ++out.good;
    if (event(p)) ++out.hits;
  }
  if (out.good > 0)
    out.density = make_rational(Integer(static_cast<unsigned long>(out.hits)), Integer(static_cast<unsigned long>(out.good)));
  return out;
}

template <class Event>
EventDensity empirical_event_density(Event&& event, u64 bound) {
  return empirical_event_density(std::forward<Event>(event), bound, [](u64) { return true; });
}

}  // namespace ramex
