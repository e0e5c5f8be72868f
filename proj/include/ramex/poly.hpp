#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over an exact integral domain.
 *
 * Poly<Integer> is Z[X]; Poly<Poly<Integer>> is Z[t][X], which is what the
 * discriminant of a two-variable defining polynomial is computed over.
 * The coefficient ring only has to provide ring_traits<R>: zero/one,
 * is_zero and an exact division that throws when the quotient is not in R.
 */

#include "ramex/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ramex {

template <class R>
struct ring_traits;

template <>
struct ring_traits<Integer> {
  static Integer zero() { return 0; }
  static Integer one() { return 1; }
  static Integer from_int(long v) { return v; }
  static bool is_zero(const Integer& a) { return a == 0; }
  static Integer exact_div(const Integer& a, const Integer& b) { return divexact(a, b); }
};

template <class R>
class Poly {
 public:
  using coeff_type = R;
  using traits = ring_traits<R>;

  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(R a) { return Poly(std::vector<R>{std::move(a)}); }
  static Poly monomial(R a, std::size_t d) {
    std::vector<R> c(d + 1, traits::zero());
    c[d] = std::move(a);
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(traits::one(), 1); }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<R>& coeffs() const { return c_; }

  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : traits::zero(); }
  const R& lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_constant() const { return c_.size() <= 1; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<R> r(std::max(a.size(), b.size()), traits::zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<R> r(std::max(a.size(), b.size()), traits::zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<R> r = a.c_;
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> r(a.size() + b.size() - 1, traits::zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const R& s, const Poly& a) {
    std::vector<R> r = a.c_;
    for (auto& x : r) x = s * x;
    return Poly(std::move(r));
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  // Multiply by X^n.
  Poly shift(std::size_t n) const {
    if (is_zero() || n == 0) return *this;
    std::vector<R> r(n, traits::zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = traits::from_int(static_cast<long>(i)) * c_[i];
    return Poly(std::move(r));
  }

  template <class S>
  S eval(const S& x) const {
    S acc = S(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + S(*it);
    return acc;
  }

  Poly pow(unsigned e) const {
    Poly r = constant(traits::one()), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1u;
      if (e) b *= b;
    }
    return r;
  }

  // Divides every coefficient exactly by s.
  Poly exact_div_scalar(const R& s) const {
    std::vector<R> r = c_;
    for (auto& x : r) x = traits::exact_div(x, s);
    return Poly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

template <class R>
struct ring_traits<Poly<R>> {
  static Poly<R> zero() { return Poly<R>(); }
  static Poly<R> one() { return Poly<R>::constant(ring_traits<R>::one()); }
  static Poly<R> from_int(long v) { return Poly<R>::constant(ring_traits<R>::from_int(v)); }
  static bool is_zero(const Poly<R>& a) { return a.is_zero(); }
  static Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b);
};

// lc(b)^(deg a - deg b + 1) * a mod b.
template <class R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-division by zero polynomial");
  if (a.degree() < b.degree()) return a;
  const int db = b.degree();
  const R& lb = b.lc();
  int e = a.degree() - db + 1;
  Poly<R> r = a;
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    Poly<R> term = Poly<R>::monomial(r.lc(), static_cast<std::size_t>(shift));
    r = lb * r - term * b;
    --e;
  }
  R scale = ring_traits<R>::one();
  for (int i = 0; i < e; ++i) scale = scale * lb;
  return scale * r;
}

// Exact quotient a / b in R[X]; throws std::domain_error if b does not
// divide a over R.
template <class R>
Poly<R> exact_quotient(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return Poly<R>();
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<R> rem = a.coeffs();
  const int db = b.degree();
  std::vector<R> q(static_cast<std::size_t>(a.degree() - db + 1), ring_traits<R>::zero());
  for (int i = a.degree(); i >= db; --i) {
    const R& top = rem[static_cast<std::size_t>(i)];
    if (ring_traits<R>::is_zero(top)) continue;
    R qi = ring_traits<R>::exact_div(top, b.lc());
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= qi * b.coeffs()[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(i - db)] = std::move(qi);
  }
  for (const auto& r : rem)
    if (!ring_traits<R>::is_zero(r)) throw std::domain_error("inexact polynomial division");
  return Poly<R>(std::move(q));
}

template <class R>
Poly<R> ring_traits<Poly<R>>::exact_div(const Poly<R>& a, const Poly<R>& b) {
  return exact_quotient(a, b);
}

using UniPoly = Poly<Integer>;

}  // namespace ramex
