#pragma once

// Quadratic (C2) specializations. The specialization of X^2 - h(t) at t0 is
// Q(sqrt(h(t0))), classified by the squarefree kernel of h(t0).

#include "ramex/algebra.hpp"
#include "ramex/integer.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramex {

struct SquarefreeKernel {
  Integer d;  // squarefree, nonzero; 1 is the trivial extension
  friend bool operator==(const SquarefreeKernel& a, const SquarefreeKernel& b) { return a.d == b.d; }
  friend bool operator<(const SquarefreeKernel& a, const SquarefreeKernel& b) { return a.d < b.d; }
};

namespace detail {

inline bool is_perfect_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

// Squarefree part of n > 0. Trial division to 10^6; a leftover cofactor is
// either 1, a square, a prime, or (below 10^18) a product of two distinct
// primes. Anything else cannot be settled cheaply.
inline Integer squarefree_part(Integer n) {
  Integer out = 1;
  for (unsigned long p = 2; p <= 1000000 && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  if (n == 1 || is_perfect_square(n)) return out;
  if (n < Integer("1000000000000000000") || mpz_probab_prime_p(n.get_mpz_t(), 30)) return out * n;
  throw std::domain_error("squarefree kernel: cofactor " + n.get_str() + " too large to factor");
}

}  // namespace detail

/// The squarefree d with q = d * (rational square).
inline SquarefreeKernel squarefree_kernel(const Rational& q) {
  if (q == 0) throw std::invalid_argument("squarefree kernel of zero");
  Integer n = abs_value(Integer(q.get_num() * q.get_den()));
  Integer d = detail::squarefree_part(n);
  return {q < 0 ? Integer(-d) : d};
}

inline bool is_squarefree_integer(const Integer& d) {
  return d != 0 && detail::squarefree_part(abs_value(d)) == abs_value(d);
}

/// Kernel of X^2 - h(t0), or nullopt (RAMIFIED) when h(t0) = 0.
inline std::optional<SquarefreeKernel> specialization_kernel(const UniPoly& h, const Rational& t0) {
  if (h.is_zero()) throw std::invalid_argument("specialization_kernel: zero polynomial");
  const Rational v = eval_rational(h, t0);
  if (v == 0) return std::nullopt;
  return squarefree_kernel(v);
}

/// The specialization at t0 = infinity: t = 1/u, X^2 - u^(2e) h(1/u) at u = 0
/// with 2e >= deg h the least even bound. Odd degree means ramified.
inline std::optional<SquarefreeKernel> specialization_kernel_at_infinity(const UniPoly& h) {
  if (h.is_zero()) throw std::invalid_argument("specialization_kernel: zero polynomial");
  if (h.degree() % 2) return std::nullopt;
  return squarefree_kernel(Rational(h.lc()));
}

/// s0 = (1 + d m^2)/(1 - d m^2), so that s0^2 - 1 = d (2m/(1 - d m^2))^2.
/// The identity is re-verified exactly before returning.
inline Rational c2_realize(const Integer& d, const Rational& m) {
  if (!is_squarefree_integer(d)) throw std::invalid_argument("c2_realize: d must be squarefree and nonzero");
  if (d == 1) throw std::invalid_argument("c2_realize: d = 1 is the trivial extension");
  if (m == 0) throw std::invalid_argument("c2_realize: m must be nonzero");
  const Rational dm2 = Rational(d) * m * m;
  if (dm2 == 1) throw std::invalid_argument("c2_realize: parameter collision d*m^2 = 1");
  const Rational s0 = (1 + dm2) / (1 - dm2);
  const Rational y = 2 * m / (1 - dm2);
  if (s0 * s0 - 1 != Rational(d) * y * y || squarefree_kernel(s0 * s0 - 1).d != d)
    throw std::logic_error("c2_realize: conic identity failed");
  return s0;
}

/// A point of P^1(Q) as a string: "a/b", "a", or "inf".
inline std::string point_string(const std::optional<Rational>& t0) { return t0 ? t0->get_str() : "inf"; }

struct SpecializationSet {
  UniPoly h;
  unsigned height = 0;
  // kernel -> first realizing t0 in enumeration order (nullopt = infinity)
  std::map<Integer, std::optional<Rational>> kernels;
  std::vector<std::optional<Rational>> ramified;
};

/// t0 = infinity first, then a/b in lowest terms ordered by height
/// max(|a|, b), then denominator, then numerator.
inline std::vector<std::optional<Rational>> specialization_points(unsigned height) {
  std::vector<std::optional<Rational>> out{std::nullopt};
  for (long h = 1; h <= static_cast<long>(height); ++h) {
    std::vector<Rational> level;
    for (long b = 1; b <= h; ++b)
      for (long a = -h; a <= h; ++a) {
        if (std::max(std::labs(a), b) != h || std::gcd(std::labs(a), b) != 1) continue;
        level.push_back(make_rational(a, b));
      }
    for (auto& q : level) out.emplace_back(q);
  }
  return out;
}

inline SpecializationSet specialization_set(const UniPoly& h, unsigned height) {
  SpecializationSet s{h, height, {}, {}};
  for (const auto& t0 : specialization_points(height)) {
    const auto k = t0 ? specialization_kernel(h, *t0) : specialization_kernel_at_infinity(h);
    if (!k)
      s.ramified.push_back(t0);
    else
      s.kernels.emplace(k->d, t0);  // keeps the first witness
  }
  return s;
}

struct C2Comparison {
  SpecializationSet first, second;
  std::vector<Integer> only_in_1, only_in_2, common;
};

/// Kernels realized by h1 and h2 over points of height <= H. Differences
/// are relative to the search box; identical inputs never differ.
inline C2Comparison compare_specialization_sets(const UniPoly& h1, const UniPoly& h2, unsigned height) {
  C2Comparison c{specialization_set(h1, height), specialization_set(h2, height), {}, {}, {}};
  for (const auto& [d, w] : c.first.kernels) (c.second.kernels.count(d) ? c.common : c.only_in_1).push_back(d);
  for (const auto& [d, w] : c.second.kernels)
    if (!c.first.kernels.count(d)) c.only_in_2.push_back(d);
  return c;
}

}  // namespace ramex
