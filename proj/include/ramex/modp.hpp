#pragma once

/**
 * @file modp.hpp
 * @brief Polynomials over prime fields F_p for word-sized p (< 2^62).
 *
 * Root counting uses deg gcd(X^p - X, f). Full factorization runs the
 * usual pipeline: squarefree decomposition, distinct-degree splitting,
 * then Cantor-Zassenhaus equal-degree splitting (trace map for p = 2)
 * driven by a seeded generator so results are reproducible.
 *
 * A prime is "good" for a polynomial when it divides neither the content,
 * nor the leading coefficient, nor the discriminant of the radical; for a
 * binary form the projective discriminant takes over the last two roles.
 * Cycle types and complete-splitting tests are only meaningful at good
 * primes and callers are expected to filter.
 */

#include "ramex/algebra.hpp"
#include "ramex/forms.hpp"
#include "ramex/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramex {

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}
inline u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1u) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1u;
  }
  return r;
}
inline u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return powmod(a, p - 2, p);
}

/// Deterministic Miller-Rabin; the first twelve prime bases are exact below 2^64.
inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : small) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  for (u64 a : small) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline constexpr u64 kMaxPrime = u64(1) << 62;

class Prime {
 public:
  explicit Prime(u64 p) : p_(p) {
    if (p >= kMaxPrime || !is_prime_u64(p)) throw std::invalid_argument("not a supported prime: " + std::to_string(p));
  }
  // For values produced by the sieve.
  static Prime unchecked(u64 p) { return Prime(p, 0); }

  u64 value() const { return p_; }
  operator u64() const { return p_; }

 private:
  Prime(u64 p, int) : p_(p) {}
  u64 p_;
};

/// All primes p <= bound, ascending.
inline std::vector<u64> primes_up_to(u64 bound) {
  std::vector<u64> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (u64 i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

// ---------------------------------------------------------------------------

class PolyModP {
 public:
  PolyModP(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= p_;
    trim();
  }
  explicit PolyModP(u64 p) : p_(p) {}

  static PolyModP constant(u64 p, u64 a) { return PolyModP(p, {a}); }
  static PolyModP x(u64 p) { return PolyModP(p, {0, 1}); }

  u64 p() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<u64>& coeffs() const { return c_; }
  u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  u64 lc() const { return c_.empty() ? 0 : c_.back(); }

  friend bool operator==(const PolyModP& a, const PolyModP& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend bool operator<(const PolyModP& a, const PolyModP& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
  }

  friend PolyModP operator+(const PolyModP& a, const PolyModP& b) {
    std::vector<u64> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = addmod(a.coeff(i), b.coeff(i), a.p_);
    return PolyModP(a.p_, std::move(r));
  }
  friend PolyModP operator-(const PolyModP& a, const PolyModP& b) {
    std::vector<u64> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = submod(a.coeff(i), b.coeff(i), a.p_);
    return PolyModP(a.p_, std::move(r));
  }
  friend PolyModP operator*(const PolyModP& a, const PolyModP& b) {
    if (a.is_zero() || b.is_zero()) return PolyModP(a.p_);
    std::vector<u64> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = addmod(r[i + j], mulmod(a.c_[i], b.c_[j], a.p_), a.p_);
    }
    return PolyModP(a.p_, std::move(r));
  }
  PolyModP scaled(u64 s) const {
    std::vector<u64> r = c_;
    for (auto& x : r) x = mulmod(x, s % p_, p_);
    return PolyModP(p_, std::move(r));
  }
  PolyModP monic() const {
    if (is_zero()) return *this;
    return scaled(invmod(lc(), p_));
  }
  PolyModP derivative() const {
    if (c_.size() <= 1) return PolyModP(p_);
    std::vector<u64> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = mulmod(c_[i], i % p_, p_);
    return PolyModP(p_, std::move(r));
  }
  u64 eval(u64 x) const {
    u64 acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = addmod(mulmod(acc, x, p_), *it, p_);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  u64 p_;
  std::vector<u64> c_;
};

inline std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial mod p");
  const u64 p = a.p();
  if (a.degree() < b.degree()) return {PolyModP(p), a};
  std::vector<u64> rem = a.coeffs();
  const int db = b.degree();
  const u64 inv = invmod(b.lc(), p);
  std::vector<u64> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int i = a.degree(); i >= db; --i) {
    const u64 top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    const u64 qi = mulmod(top, inv, p);
    q[static_cast<std::size_t>(i - db)] = qi;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = submod(slot, mulmod(qi, b.coeffs()[static_cast<std::size_t>(j)], p), p);
    }
  }
  return {PolyModP(p, std::move(q)), PolyModP(p, std::move(rem))};
}

inline PolyModP operator%(const PolyModP& a, const PolyModP& b) { return divmod(a, b).second; }
inline PolyModP operator/(const PolyModP& a, const PolyModP& b) { return divmod(a, b).first; }

/// Monic gcd; gcd(0, 0) = 0.
inline PolyModP gcd(PolyModP a, PolyModP b) {
  while (!b.is_zero()) {
    PolyModP r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline PolyModP mulmod(const PolyModP& a, const PolyModP& b, const PolyModP& m) { return (a * b) % m; }

inline PolyModP powmod(PolyModP base, u64 e, const PolyModP& m) {
  PolyModP r = PolyModP::constant(m.p(), 1) % m;
  base = base % m;
  while (e) {
    if (e & 1u) r = mulmod(r, base, m);
    e >>= 1u;
    if (e) base = mulmod(base, base, m);
  }
  return r;
}

inline PolyModP powmod(PolyModP base, const Integer& e, const PolyModP& m) {
  PolyModP r = PolyModP::constant(m.p(), 1) % m;
  base = base % m;
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mulmod(r, r, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, base, m);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Reduction from Z.

struct Reduction {
  PolyModP poly;
  bool degree_drop = false;      // p divides the leading coefficient
  bool content_divisible = false;  // p divides every coefficient
};

inline Reduction reduce_mod_p(const UniPoly& f, u64 p) {
  std::vector<u64> c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) c[i] = mod_u64(f.coeffs()[i], p);
  PolyModP r(p, std::move(c));
  Reduction out{r, false, false};
  out.degree_drop = !f.is_zero() && r.degree() < f.degree();
  out.content_divisible = !f.is_zero() && r.is_zero();
  return out;
}

struct FormReduction {
  PolyModP affine;        // h(X, 1) mod p
  u64 infinity_coeff = 0;  // coefficient of X^deg h mod p; 0 means (1:0) is a root
  bool content_divisible = false;
};

inline FormReduction reduce_mod_p(const BiPolyHom& h, u64 p) {
  Reduction r = reduce_mod_p(dehomogenize(h), p);
  FormReduction out{r.poly, mod_u64(h.coeff(h.degree()), p), false};
  out.content_divisible = r.poly.is_zero();
  return out;
}

/// Number of distinct roots in F_p.
inline unsigned count_roots_mod_p(const PolyModP& f) {
  if (f.is_zero()) throw std::domain_error("count_roots_mod_p: zero polynomial");
  if (f.degree() <= 0) return 0;
  const PolyModP xp = powmod(PolyModP::x(f.p()), f.p(), f);
  return static_cast<unsigned>(gcd(xp - PolyModP::x(f.p()), f).degree());
}

/// Distinct roots of h in P^1(F_p).
inline unsigned count_projective_roots(const BiPolyHom& h, u64 p) {
  const FormReduction r = reduce_mod_p(h, p);
  if (r.content_divisible) throw std::domain_error("count_projective_roots: form vanishes mod " + std::to_string(p));
  unsigned n = r.affine.degree() >= 1 ? count_roots_mod_p(r.affine) : 0u;
  if (h.degree() > 0 && r.infinity_coeff == 0) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Factorization.

struct Factorization {
  u64 unit = 0;
  std::vector<std::pair<PolyModP, unsigned>> factors;  // monic irreducible, multiplicity
};

namespace detail {

inline u64 splitmix64(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline u64 poly_hash(const PolyModP& f) {
  u64 h = splitmix64(f.p());
  for (u64 c : f.coeffs()) h = splitmix64(h ^ c);
  return h;
}

// f^(1/p) for f whose derivative vanishes (only X^(ip) terms).
inline PolyModP pth_root(const PolyModP& f) {
  const u64 p = f.p();
  std::vector<u64> r(static_cast<std::size_t>(f.degree()) / p + 1, 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.coeff(i * p);
  return PolyModP(p, std::move(r));
}

// Monic f -> list of (squarefree g, multiplicity).
inline void squarefree_decompose(const PolyModP& f, unsigned mult, std::vector<std::pair<PolyModP, unsigned>>& out) {
  if (f.degree() <= 0) return;
  const u64 p = f.p();
  const PolyModP d = f.derivative();
  if (d.is_zero()) {
    squarefree_decompose(pth_root(f), mult * static_cast<unsigned>(p), out);
    return;
  }
  PolyModP c = gcd(f, d);
  PolyModP w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    PolyModP y = gcd(w, c);
    PolyModP fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree_decompose(pth_root(c).monic(), mult * static_cast<unsigned>(p), out);
}

}  // namespace detail

/// Distinct-degree factorization of a monic squarefree f: pairs (g, d)
/// where g is the product of all irreducible factors of degree d.
inline std::vector<std::pair<PolyModP, unsigned>> distinct_degree_factor(PolyModP f) {
  std::vector<std::pair<PolyModP, unsigned>> out;
  const u64 p = f.p();
  const PolyModP x = PolyModP::x(p);
  PolyModP h = x % f;
  unsigned d = 0;
  while (f.degree() >= 2 * static_cast<int>(d + 1)) {
    ++d;
    h = powmod(h, p, f);
    PolyModP g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
  return out;
}

/// Splits a monic squarefree g whose irreducible factors all have degree d.
inline void equal_degree_factor(const PolyModP& g, unsigned d, std::mt19937_64& rng, std::vector<PolyModP>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == static_cast<int>(d)) {
    out.push_back(g);
    return;
  }
  const u64 p = g.p();
  const int n = g.degree();
  Integer exponent = 0;
  if (p != 2) {
    mpz_ui_pow_ui(exponent.get_mpz_t(), p, d);
    exponent = (exponent - 1) / 2;
  }
  for (;;) {
    std::vector<u64> a(static_cast<std::size_t>(n));
    for (auto& x : a) x = rng() % p;
    PolyModP ap(p, std::move(a));
    if (ap.degree() <= 0) continue;
    PolyModP b(p);
    if (p == 2) {
      PolyModP term = ap;
      b = ap;
      for (unsigned i = 1; i < d; ++i) {
        term = mulmod(term, term, g);
        b = b + term;
      }
    } else {
      b = powmod(ap, exponent, g) - PolyModP::constant(p, 1);
    }
    PolyModP h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < n) {
      equal_degree_factor(h, d, rng, out);
      equal_degree_factor(g / h, d, rng, out);
      return;
    }
  }
}

/// Complete factorization into monic irreducibles, sorted canonically.
/// Deterministic for a fixed seed.
inline Factorization factor_mod_p(const PolyModP& f, u64 seed = 0) {
  if (f.is_zero()) throw std::domain_error("factor_mod_p: zero polynomial");
  Factorization out;
  out.unit = f.lc();
  std::mt19937_64 rng(detail::splitmix64(seed ^ detail::poly_hash(f)));
  std::vector<std::pair<PolyModP, unsigned>> sqf;
  detail::squarefree_decompose(f.monic(), 1, sqf);
  for (const auto& [g, mult] : sqf) {
    for (const auto& [part, d] : distinct_degree_factor(g)) {
      std::vector<PolyModP> irr;
      equal_degree_factor(part, d, rng, irr);
      for (auto& q : irr) out.factors.emplace_back(std::move(q), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return a.first < b.first;
  });
  // Equal irreducibles can only come from different squarefree layers; merge.
  std::vector<std::pair<PolyModP, unsigned>> merged;
  for (auto& fm : out.factors) {
    if (!merged.empty() && merged.back().first == fm.first) merged.back().second += fm.second;
    else merged.push_back(std::move(fm));
  }
  out.factors = std::move(merged);
  return out;
}

// ---------------------------------------------------------------------------
// Cycle types.

/// Sorted multiset of irreducible-factor degrees.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<unsigned> parts) : parts_(std::move(parts)) { std::sort(parts_.begin(), parts_.end()); }

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned total() const {
    unsigned s = 0;
    for (unsigned x : parts_) s += x;
    return s;
  }
  unsigned fixed_points() const { return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), 1u)); }
  bool all_ones() const { return fixed_points() == parts_.size(); }

  // "1,1,2"
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s;
  }

  friend bool operator==(const CycleType& a, const CycleType& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const CycleType& a, const CycleType& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<unsigned> parts_;
};

/// Products of primes that are bad for f (content, lc, disc of radical).
inline Integer bad_prime_product(const UniPoly& f) {
  if (f.is_zero()) throw std::domain_error("bad primes of the zero polynomial");
  const UniPoly r = radical(f);
  Integer bad = content(f) * f.lc();
  if (r.degree() >= 2) bad *= discriminant(r);
  return bad;
}

/// Content times projective discriminant; h must be squarefree.
inline Integer bad_prime_product(const BiPolyHom& h) {
  const Integer disc = projective_discriminant(h);
  if (disc == 0) throw std::domain_error("bad primes of a non-squarefree form");
  return h.content() * disc;
}

class GoodPrimeTest {
 public:
  explicit GoodPrimeTest(Integer bad) : bad_(std::move(bad)) {}
  explicit GoodPrimeTest(const UniPoly& f) : bad_(bad_prime_product(f)) {}
  explicit GoodPrimeTest(const BiPolyHom& h) : bad_(bad_prime_product(h)) {}
  bool operator()(u64 p) const { return mod_u64(bad_, p) != 0; }

 private:
  Integer bad_;
};

inline CycleType cycle_type_of(const PolyModP& squarefree_monic) {
  std::vector<unsigned> parts;
  for (const auto& [g, d] : distinct_degree_factor(squarefree_monic))
    for (int i = 0; i < g.degree() / static_cast<int>(d); ++i) parts.push_back(d);
  return CycleType(std::move(parts));
}

/// Degrees of the irreducible factors of radical(f) mod p; p must be good.
inline CycleType cycle_type(const UniPoly& f, u64 p) {
  const UniPoly r = radical(f);
  const Reduction red = reduce_mod_p(r, p);
  if (red.degree_drop || red.content_divisible) throw std::domain_error("cycle_type: bad prime " + std::to_string(p));
  if (r.degree() <= 0) return CycleType();
  return cycle_type_of(red.poly.monic());
}

/// Projective cycle type of a squarefree form: the affine part plus a
/// fixed point for a root at infinity. p must be good for h.
inline CycleType cycle_type(const BiPolyHom& h, u64 p) {
  const FormReduction red = reduce_mod_p(h, p);
  if (red.content_divisible) throw std::domain_error("cycle_type: bad prime " + std::to_string(p));
  std::vector<unsigned> parts;
  if (red.affine.degree() >= 1) parts = cycle_type_of(red.affine.monic()).parts();
  for (unsigned i = static_cast<unsigned>(std::max(0, red.affine.degree())); i < h.degree(); ++i) parts.push_back(1);
  return CycleType(std::move(parts));
}

/// h has deg h distinct roots in P^1(F_p).
inline bool splits_completely(const BiPolyHom& h, u64 p) { return count_projective_roots(h, p) == h.degree(); }

}  // namespace ramex
