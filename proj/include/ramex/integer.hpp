#pragma once

// Exact scalars. Integer and Rational are GMP-backed; Rational is always
// kept canonical (positive denominator, lowest terms).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramex {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer abs_value(const Integer& a) { return abs(a); }

inline Integer gcd_int(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow_rat(const Rational& base, unsigned long e) {
  Rational r(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
  r.canonicalize();
  return r;
}

// Exact quotient; throws if b does not divide a.
inline Integer divexact(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw std::domain_error("inexact integer division");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// a mod p in [0, p).
inline std::uint64_t mod_u64(const Integer& a, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long required");
  return mpz_fdiv_ui(a.get_mpz_t(), p);
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Always "num/den", also for integral values, so serialized densities have
// a single shape.
inline std::string rational_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "a", "-a" or "a/b".
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

inline Integer parse_integer(const std::string& text) {
  Integer z;
  if (text.empty() || z.set_str(text, 10) != 0) throw std::invalid_argument("bad integer: " + text);
  return z;
}

}  // namespace ramex
