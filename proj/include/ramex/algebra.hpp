#pragma once

// Operations on UniPoly = Z[X]: content, gcd, radical, discriminant,
// heights, rational roots and the canonical text form.

#include "ramex/integer.hpp"
#include "ramex/poly.hpp"
#include "ramex/resultant.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramex {

inline Integer content(const UniPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) g = gcd_int(g, c);
  return g;
}

// Primitive part with positive leading coefficient; zero stays zero.
inline UniPoly primitive_part(const UniPoly& f) {
  if (f.is_zero()) return f;
  Integer c = content(f);
  if (f.lc() < 0) c = -c;
  return f.exact_div_scalar(c);
}

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
inline UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  UniPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    UniPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x);
}

inline bool is_squarefree(const UniPoly& f) {
  if (f.is_zero()) return false;
  return poly_gcd(f, f.derivative()).degree() <= 0;
}

/// Primitive squarefree polynomial with the same complex roots as f.
inline UniPoly radical(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("radical of the zero polynomial");
  if (f.degree() <= 0) return UniPoly{1};
  UniPoly g = poly_gcd(f, f.derivative());
  return primitive_part(exact_quotient(primitive_part(f), g));
}

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f).
inline Integer discriminant(const UniPoly& f) {
  if (f.degree() < 1) throw std::domain_error("discriminant needs degree >= 1");
  const long n = f.degree();
  Integer d = divexact(resultant(f, f.derivative()), f.lc());
  return (n * (n - 1) / 2) % 2 ? Integer(-d) : d;
}

/// Height over Q: the largest absolute coefficient.
inline Integer height(const UniPoly& f) {
  Integer h = 0;
  for (const auto& c : f.coeffs()) h = std::max(h, Integer(abs(c)));
  return h;
}

inline Rational eval_rational(const UniPoly& f, const Rational& x) {
  Rational acc = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

/// Text form accepted by the polynomial parser, e.g. "3*X^2 - 5*X + 2".
inline std::string to_string(const UniPoly& f, const std::string& var = "X") {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const Integer& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    if (i >= 1) mono = var + (i > 1 ? "^" + std::to_string(i) : "");
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

namespace detail {

// Positive divisors of |n| (n != 0) by trial division.
inline std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  if (n == 0) throw std::domain_error("divisors of zero");
  std::vector<std::pair<Integer, unsigned>> factors;
  Integer d = 2;
  const Integer trial_limit = Integer(10000000);
  while (d * d <= n) {
    if (d > trial_limit) {
      if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
        throw std::domain_error("coefficient too large for rational root search");
      break;
    }
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      ++e;
    }
    if (e) factors.emplace_back(d, e);
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace detail

/// All distinct rational roots of a nonzero polynomial, ascending.
inline std::vector<Rational> rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (f.coeffs()[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  std::vector<Integer> rest(f.coeffs().begin() + static_cast<long>(low), f.coeffs().end());
  UniPoly g(rest);
  if (g.degree() >= 1) {
    const auto nums = detail::positive_divisors(g.coeffs().front());
    const auto dens = detail::positive_divisors(g.lc());
    const long n = g.degree();
    for (const auto& b : dens) {
      for (const auto& a0 : nums) {
        if (gcd_int(a0, b) != 1) continue;
        for (int s : {1, -1}) {
          Integer a = s * a0;
          // b^n f(a/b)
          Integer acc = 0, apow = 1;
          std::vector<Integer> bpow(static_cast<std::size_t>(n) + 1);
          bpow[0] = 1;
          for (long i = 1; i <= n; ++i) bpow[static_cast<std::size_t>(i)] = bpow[static_cast<std::size_t>(i - 1)] * b;
          for (long i = 0; i <= n; ++i) {
            acc += g.coeffs()[static_cast<std::size_t>(i)] * apow * bpow[static_cast<std::size_t>(n - i)];
            apow *= a;
          }
          if (acc == 0) roots.push_back(make_rational(a, b));
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace ramex
