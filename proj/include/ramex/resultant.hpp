#pragma once

// Resultants via the subresultant pseudo-remainder sequence, and a
// fraction-free (Bareiss) determinant for Sylvester matrices with formal
// degrees. Both are generic over the coefficient ring.

#include "ramex/poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace ramex {

namespace detail {

template <class R>
R ring_pow(const R& base, long e) {
  R r = ring_traits<R>::one();
  for (long i = 0; i < e; ++i) r = r * base;
  return r;
}

// Integer content; Z[t]-coefficient polynomials skip content removal.
template <class R>
R content_or_one(const Poly<R>& p) {
  if constexpr (std::is_same_v<R, Integer>) {
    Integer g = 0;
    for (const auto& c : p.coeffs()) g = gcd_int(g, c);
    return g == 0 ? Integer(1) : g;
  } else {
    return ring_traits<R>::one();
  }
}

}  // namespace detail

/// Res(a, b), equal to the determinant of the Sylvester matrix built from
/// the actual degrees of a and b.
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
  using T = ring_traits<R>;
  if (a.is_zero() && b.is_zero()) throw std::domain_error("resultant(0, 0) is undefined");
  if (a.is_zero() || b.is_zero()) return T::zero();
  if (b.degree() == 0) return detail::ring_pow(b.lc(), a.degree());
  if (a.degree() == 0) return detail::ring_pow(a.lc(), b.degree());

  const R ca = detail::content_or_one(a);
  const R cb = detail::content_or_one(b);
  a = a.exact_div_scalar(ca);
  b = b.exact_div_scalar(cb);
  const R scale = detail::ring_pow(ca, b.degree()) * detail::ring_pow(cb, a.degree());

  R g = T::one(), h = T::one();
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -1;
  }
  for (;;) {
    const long delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    Poly<R> r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.exact_div_scalar(g * detail::ring_pow(h, delta));
    g = a.lc();
    // h <- h^(1 - delta) * g^delta
    if (delta > 0) h = T::exact_div(detail::ring_pow(g, delta), detail::ring_pow(h, delta - 1));
    if (b.is_zero()) return T::zero();
    if (b.degree() == 0) break;
  }
  // h^(1 - deg a) * lc(b)^deg a
  const long da = a.degree();
  R tail = T::exact_div(detail::ring_pow(b.lc(), da), detail::ring_pow(h, da - 1));
  R out = scale * tail;
  return sign < 0 ? R(-out) : out;
}

/// Sylvester matrix of (a, b) with formal degrees m >= deg a, n >= deg b.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const Poly<R>& a, std::size_t m, const Poly<R>& b, std::size_t n) {
  const std::size_t size = m + n;
  std::vector<std::vector<R>> s(size, std::vector<R>(size, ring_traits<R>::zero()));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t j = 0; j <= m; ++j) s[row][row + j] = a.coeff(m - j);
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t j = 0; j <= n; ++j) s[n + row][row + j] = b.coeff(n - j);
  return s;
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
  using T = ring_traits<R>;
  const std::size_t n = m.size();
  if (n == 0) return T::one();
  R prev = T::one();
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (T::is_zero(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && T::is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return T::zero();
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = T::exact_div(num, prev);
      }
      m[i][k] = T::zero();
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return sign < 0 ? R(-det) : det;
}

}  // namespace ramex
