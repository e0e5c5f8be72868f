#pragma once

// Homogeneous bivariate polynomials (binary forms), the two-variable
// defining polynomials f(t, X) of covers, and the rational functions
// g = g1/g2 used as translates.
//
// A BiPolyHom of degree d stores the coefficient of X^i * Y^(d-i) at
// index i. Projective roots (a:b) live in P^1; (1:0) is the point at
// infinity and is a root exactly when Y divides the form.

#include "ramex/algebra.hpp"
#include "ramex/integer.hpp"
#include "ramex/poly.hpp"
#include "ramex/resultant.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramex {

namespace detail {

struct Term {
  Integer coef;
  std::string monomial;  // empty for a constant term
};

inline std::string power(const std::string& var, unsigned e) {
  if (e == 0) return "";
  return e == 1 ? var : var + "^" + std::to_string(e);
}

inline std::string join_monomial(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

inline std::string format_terms(const std::vector<Term>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (t.coef == 0) continue;
    const Integer mag = abs(t.coef);
    if (out.empty()) {
      if (t.coef < 0) out += "-";
    } else {
      out += t.coef < 0 ? " - " : " + ";
    }
    if (t.monomial.empty()) out += mag.get_str();
    else if (mag == 1) out += t.monomial;
    else out += mag.get_str() + "*" + t.monomial;
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

class BiPolyHom {
 public:
  BiPolyHom() : coeffs_(1, Integer(0)) {}
  BiPolyHom(unsigned degree, std::vector<Integer> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > degree_ + 1) {
      for (std::size_t i = degree_ + 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) throw std::invalid_argument("coefficient beyond the form degree");
    }
    coeffs_.resize(degree_ + 1, Integer(0));
  }

  unsigned degree() const { return degree_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  // Coefficient of X^i * Y^(degree - i).
  const Integer& coeff(unsigned i) const { return coeffs_.at(i); }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
  }
  // Multiplicity of the root at infinity.
  unsigned y_multiplicity() const {
    if (is_zero()) return degree_;
    unsigned top = degree_;
    while (coeffs_[top] == 0) --top;
    return degree_ - top;
  }
  bool has_infinity_root() const { return !is_zero() && coeffs_[degree_] == 0; }

  friend bool operator==(const BiPolyHom& a, const BiPolyHom& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const BiPolyHom& a, const BiPolyHom& b) { return !(a == b); }

  friend BiPolyHom operator*(const BiPolyHom& a, const BiPolyHom& b) {
    std::vector<Integer> r(a.degree_ + b.degree_ + 1, Integer(0));
    for (unsigned i = 0; i <= a.degree_; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (unsigned j = 0; j <= b.degree_; ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return BiPolyHom(a.degree_ + b.degree_, std::move(r));
  }
  friend BiPolyHom operator+(const BiPolyHom& a, const BiPolyHom& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("adding forms of different degree");
    std::vector<Integer> r = a.coeffs_;
    for (unsigned i = 0; i <= a.degree_; ++i) r[i] += b.coeffs_[i];
    return BiPolyHom(a.degree_, std::move(r));
  }
  friend BiPolyHom operator*(const Integer& s, const BiPolyHom& a) {
    std::vector<Integer> r = a.coeffs_;
    for (auto& c : r) c *= s;
    return BiPolyHom(a.degree_, std::move(r));
  }

  BiPolyHom pow(unsigned e) const {
    BiPolyHom r(0, {Integer(1)});
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) g = gcd_int(g, c);
    return g;
  }

  // Content-free, with the coefficient at the highest occurring X-power
  // positive.
  BiPolyHom primitive() const {
    if (is_zero()) return *this;
    Integer c = content();
    if (coeffs_[degree_ - y_multiplicity()] < 0) c = -c;
    std::vector<Integer> r = coeffs_;
    for (auto& x : r) x = divexact(x, c);
    return BiPolyHom(degree_, std::move(r));
  }

 private:
  unsigned degree_ = 0;
  std::vector<Integer> coeffs_;
};

inline BiPolyHom homogenize(const UniPoly& f, unsigned target_degree) {
  if (f.degree() > static_cast<int>(target_degree))
    throw std::invalid_argument("homogenize: target degree below polynomial degree");
  return BiPolyHom(target_degree, f.coeffs());
}

inline UniPoly dehomogenize(const BiPolyHom& h) { return UniPoly(h.coeffs()); }

inline std::string to_string(const BiPolyHom& h) {
  std::vector<detail::Term> terms;
  for (int i = static_cast<int>(h.degree()); i >= 0; --i) {
    const auto xi = static_cast<unsigned>(i);
    terms.push_back({h.coeff(xi), detail::join_monomial(detail::power("X", xi), detail::power("Y", h.degree() - xi))});
  }
  return detail::format_terms(terms);
}

/// Squarefree primitive form with the same projective root set.
inline BiPolyHom projective_radical(const BiPolyHom& h) {
  if (h.is_zero()) throw std::domain_error("radical of the zero form");
  const UniPoly u = dehomogenize(h);
  const UniPoly r = radical(u);
  const unsigned inf = h.y_multiplicity() > 0 ? 1u : 0u;
  return homogenize(r, static_cast<unsigned>(r.degree()) + inf).primitive();
}

inline bool is_squarefree_form(const BiPolyHom& h) {
  if (h.is_zero()) return false;
  return h.y_multiplicity() <= 1 && is_squarefree(dehomogenize(h));
}

/// Discriminant of h as a binary form of degree deg h. Nonzero exactly when
/// h has deg h distinct projective roots; reduction mod p commutes with it.
inline Integer projective_discriminant(const BiPolyHom& h) {
  const unsigned n = h.degree();
  if (n <= 1) return h.is_zero() ? Integer(0) : Integer(1);
  const UniPoly u = dehomogenize(h);
  const unsigned ym = h.y_multiplicity();
  if (ym >= 2) return 0;
  if (ym == 0) return discriminant(u);
  const Integer lc2 = u.lc() * u.lc();
  return u.degree() >= 2 ? Integer(lc2 * discriminant(u)) : lc2;
}

/// Resultant of two binary forms (Sylvester determinant with the formal
/// degrees); zero iff they share a projective root.
inline Integer form_resultant(const BiPolyHom& a, const BiPolyHom& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.degree() == 0) return pow_int(a.coeff(0), b.degree());
  if (b.degree() == 0) return pow_int(b.coeff(0), a.degree());
  return bareiss_determinant(sylvester_matrix(dehomogenize(a), a.degree(), dehomogenize(b), b.degree()));
}

struct ProjectivePoint {
  Rational value;        // meaningful when !infinity
  bool infinity = false;
  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.infinity == b.infinity && (a.infinity || a.value == b.value);
  }
};

inline std::string to_string(const ProjectivePoint& p) {
  return p.infinity ? std::string("inf") : p.value.get_str();
}

inline std::vector<ProjectivePoint> rational_projective_roots(const BiPolyHom& h) {
  std::vector<ProjectivePoint> out;
  const UniPoly u = dehomogenize(h);
  if (u.degree() >= 1)
    for (auto& r : rational_roots(u)) out.push_back({r, false});
  if (h.has_infinity_root()) out.push_back({Rational(0), true});
  return out;
}

/// True when the squarefree form h is a product of linear forms over Q.
inline bool splits_over_rationals(const BiPolyHom& h) {
  return rational_projective_roots(h).size() == h.degree();
}

/// The linear form vanishing at p: b*X - a*Y for p = a/b, Y for infinity.
inline BiPolyHom linear_form(const ProjectivePoint& p) {
  if (p.infinity) return BiPolyHom(1, {Integer(1), Integer(0)});
  return BiPolyHom(1, {Integer(-p.value.get_num()), p.value.get_den()});
}

// ---------------------------------------------------------------------------
// Two-variable defining polynomials f(t, X).

/// Polynomial in X whose coefficients lie in Z[t].
using BiPolyT = Poly<UniPoly>;

inline int degree_t(const BiPolyT& f) {
  int d = -1;
  for (const auto& c : f.coeffs()) d = std::max(d, c.degree());
  return d;
}

inline std::string to_string(const BiPolyT& f) {
  std::vector<detail::Term> terms;
  for (int i = f.degree(); i >= 0; --i) {
    const UniPoly& c = f.coeffs()[static_cast<std::size_t>(i)];
    for (int j = c.degree(); j >= 0; --j)
      terms.push_back({c.coeffs()[static_cast<std::size_t>(j)],
                       detail::join_monomial(detail::power("X", static_cast<unsigned>(i)),
                                             detail::power("t", static_cast<unsigned>(j)))});
  }
  return detail::format_terms(terms);
}

/// disc_X(f) in Z[t] with the sign (-1)^(n(n-1)/2) Res_X(f, df/dX) / lc_X(f).
inline UniPoly discriminant_in_x(const BiPolyT& f) {
  const long n = f.degree();
  if (n < 2) throw std::domain_error("discriminant_in_x needs X-degree >= 2");
  UniPoly res = resultant(f, f.derivative());
  UniPoly d = exact_quotient(res, f.lc());
  return (n * (n - 1) / 2) % 2 ? UniPoly(-d) : d;
}

// ---------------------------------------------------------------------------
// Rational functions g = g1/g2.

struct RatFunc {
  UniPoly g1;
  UniPoly g2;
  unsigned k = 0;  // nominal degree bound

  // max(deg g1, deg g2); 0 for constants.
  unsigned degree() const {
    return static_cast<unsigned>(std::max({0, g1.degree(), g2.degree()}));
  }
};

inline Integer height(const RatFunc& g) { return std::max(height(g.g1), height(g.g2)); }

/// Divides out gcd(g1, g2) and makes lc(g2) positive. Returns nullopt when
/// g2 = 0 or the reduced function is constant (including g1 = 0).
inline std::optional<RatFunc> normalize(const RatFunc& g) {
  if (g.g2.is_zero() || g.g1.is_zero()) return std::nullopt;
  if (std::max(g.g1.degree(), g.g2.degree()) > static_cast<int>(g.k))
    throw std::invalid_argument("rational function exceeds its degree bound");
  UniPoly a = g.g1, b = g.g2;
  const UniPoly common = poly_gcd(a, b);
  if (common.degree() > 0) {
    a = exact_quotient(a, common);
    b = exact_quotient(b, common);
  }
  Integer c = gcd_int(content(a), content(b));
  if (b.lc() < 0) c = -c;
  a = a.exact_div_scalar(c);
  b = b.exact_div_scalar(c);
  if (a.degree() <= 0 && b.degree() <= 0) return std::nullopt;
  return RatFunc{a, b, g.k};
}

inline bool is_valid(const RatFunc& g) { return normalize(g).has_value(); }

/// f(G1, G2) with G1, G2 the degree-k homogenizations of g1, g2.
inline BiPolyHom compose_homogeneous(const BiPolyHom& f, const RatFunc& g) {
  if (f.is_zero()) throw std::invalid_argument("compose_homogeneous: zero form");
  const BiPolyHom G1 = homogenize(g.g1, g.k);
  const BiPolyHom G2 = homogenize(g.g2, g.k);
  const unsigned d = f.degree();
  BiPolyHom acc(d * g.k, {});
  std::vector<BiPolyHom> p1{BiPolyHom(0, {Integer(1)})}, p2{BiPolyHom(0, {Integer(1)})};
  for (unsigned i = 1; i <= d; ++i) {
    p1.push_back(p1.back() * G1);
    p2.push_back(p2.back() * G2);
  }
  for (unsigned i = 0; i <= d; ++i) {
    if (f.coeff(i) == 0) continue;
    acc = acc + f.coeff(i) * (p1[i] * p2[d - i]);
  }
  return acc;
}

/// g1 - t*g2 as a polynomial in X over Z[t].
inline BiPolyT fiber_polynomial(const RatFunc& g) {
  const std::size_t n = g.degree() + 1;
  std::vector<UniPoly> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = UniPoly{g.g1.coeff(i), Integer(-g.g2.coeff(i))};
  return BiPolyT(std::move(c));
}

/// Branch locus of the cover X -> g(X) on P^1_t as a squarefree form:
/// the binary discriminant of T1*G1 - T0*G2 (degree 2n - 2), radicalized.
inline BiPolyHom branch_form(const RatFunc& g) {
  const auto ng = normalize(g);
  if (!ng) throw std::invalid_argument("branch_form: invalid rational function");
  const unsigned n = ng->degree();
  if (n < 2) return BiPolyHom(0, {Integer(1)});
  const UniPoly disc = discriminant_in_x(fiber_polynomial(*ng));
  return projective_radical(homogenize(disc, 2 * n - 2));
}

}  // namespace ramex
