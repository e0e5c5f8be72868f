#include "ramex/algebra.hpp"
#include "ramex/forms.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace ramex;

namespace {

// Independent oracle: Sylvester determinant by Gaussian elimination over Q.
Integer sylvester_oracle(const UniPoly& a, const UniPoly& b) {
  const std::size_t m = static_cast<std::size_t>(a.degree()), n = static_cast<std::size_t>(b.degree());
  const std::size_t size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = Rational(a.coeff(m - j));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = Rational(b.coeff(n - j));
  Rational det = 1;
  for (std::size_t c = 0; c < size; ++c) {
    std::size_t piv = c;
    while (piv < size && s[piv][c] == 0) ++piv;
    if (piv == size) return 0;
    if (piv != c) {
      std::swap(s[piv], s[c]);
      det = -det;
    }
    det *= s[c][c];
    for (std::size_t r = c + 1; r < size; ++r) {
      Rational f = s[r][c] / s[c][c];
      for (std::size_t j = c; j < size; ++j) s[r][j] -= f * s[c][j];
    }
  }
  det.canonicalize();
  EXPECT_EQ(det.get_den(), 1);
  return det.get_num();
}

UniPoly random_poly(std::mt19937_64& rng, int max_deg, long max_coef, bool exact_degree = false) {
  std::uniform_int_distribution<int> deg(exact_degree ? max_deg : 0, max_deg);
  std::uniform_int_distribution<long> coef(-max_coef, max_coef);
  const int d = deg(rng);
  std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return UniPoly(c);
}

// Distinct roots of f mod p by exhaustive evaluation.
unsigned brute_roots(const UniPoly& f, long p) {
  unsigned n = 0;
  for (long x = 0; x < p; ++x) {
    Integer v = f.eval(Integer(x));
    if (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p))) ++n;
  }
  return n;
}

const UniPoly X = UniPoly::x();
UniPoly c(long v) { return UniPoly::constant(Integer(v)); }

}  // namespace

TEST(PolyGcd, Examples) {
  EXPECT_EQ(poly_gcd(X * X - c(1), X - c(1)), X - c(1));
  const UniPoly f = c(-3) * X * X + c(6);
  EXPECT_EQ(poly_gcd(f, UniPoly()), primitive_part(f));
  EXPECT_EQ(poly_gcd(UniPoly(), UniPoly()), UniPoly());
  const UniPoly a = c(6) * X + c(6), b = c(4) * X + c(4);
  const UniPoly g = poly_gcd(a, b);
  EXPECT_EQ(g, X + c(1));
  // division oracle: g divides both with integral quotient
  EXPECT_EQ(exact_quotient(a, g), c(6));
  EXPECT_EQ(exact_quotient(b, g), c(4));
}

TEST(PolyGcd, CommonDivisorProperty) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const UniPoly d = random_poly(rng, 2, 5, true);
    const UniPoly a = d * random_poly(rng, 3, 5), b = d * random_poly(rng, 3, 5);
    const UniPoly g = poly_gcd(a, b);
    EXPECT_NO_THROW(exact_quotient(primitive_part(a), g));
    EXPECT_NO_THROW(exact_quotient(primitive_part(b), g));
    EXPECT_NO_THROW(exact_quotient(g, primitive_part(d)));
  }
}

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant(X - c(2), X - c(3)), -1);
  EXPECT_EQ(sylvester_oracle(X - c(2), X - c(3)), -1);
  EXPECT_EQ(resultant(X * X + c(1), X * X + c(1)), 0);
  EXPECT_EQ(resultant(X * X - c(2), X - c(1)), -1);
  EXPECT_EQ(sylvester_oracle(X * X - c(2), X - c(1)), -1);
  EXPECT_THROW(resultant(UniPoly(), UniPoly()), std::domain_error);
  EXPECT_EQ(resultant(c(3), X * X + c(1)), 9);
}

TEST(Resultant, MatchesSylvesterOracleAndSwapLaw) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const UniPoly a = random_poly(rng, 5, 20), b = random_poly(rng, 5, 20);
    if (a.degree() < 1 || b.degree() < 1) continue;
    const Integer r = resultant(a, b);
    EXPECT_EQ(r, sylvester_oracle(a, b)) << to_string(a) << " | " << to_string(b);
    const Integer sign = (a.degree() * b.degree()) % 2 ? -1 : 1;
    EXPECT_EQ(r, sign * resultant(b, a));
  }
}

TEST(Resultant, BareissAgreesOnFormalDegrees) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    const UniPoly a = random_poly(rng, 4, 9, true), b = random_poly(rng, 4, 9, true);
    auto m = sylvester_matrix(a, static_cast<std::size_t>(a.degree()), b, static_cast<std::size_t>(b.degree()));
    EXPECT_EQ(bareiss_determinant(m), sylvester_oracle(a, b));
  }
}

TEST(DiscriminantInX, Examples) {
  const UniPoly t = UniPoly::x();
  // X^2 - t
  const BiPolyT f1({-t, UniPoly(), c(1)});
  EXPECT_EQ(discriminant_in_x(f1), c(4) * t);
  // X^2 - (t^2 - 1): quadratic oracle b^2 - 4ac
  const UniPoly h = t * t - c(1);
  const BiPolyT f2({-h, UniPoly(), c(1)});
  EXPECT_EQ(discriminant_in_x(f2), c(0) * c(0) - c(4) * c(1) * (-h));
  // X^3 - X - t: -4p^3 - 27q^2 with p = -1, q = -t
  const BiPolyT f3({-t, c(-1), UniPoly(), c(1)});
  EXPECT_EQ(discriminant_in_x(f3), c(4) - c(27) * t * t);
  EXPECT_THROW(discriminant_in_x(BiPolyT({-t, c(1)})), std::domain_error);
}

TEST(DiscriminantInX, QuadraticOracleWithPolynomialCoefficients) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const UniPoly a = random_poly(rng, 2, 6, true), b = random_poly(rng, 2, 6), cc = random_poly(rng, 2, 6);
    EXPECT_EQ(discriminant_in_x(BiPolyT({cc, b, a})), b * b - c(4) * a * cc);
  }
}

TEST(UnivariateDiscriminant, CubicFormula) {
  EXPECT_EQ(discriminant(X * X * X - X - c(1)), -23);
  EXPECT_EQ(discriminant(X * X - c(2)), 8);
}

TEST(Radical, Examples) {
  EXPECT_EQ(radical((X - c(1)) * (X - c(1)) * (X + c(2))), (X - c(1)) * (X + c(2)));
  EXPECT_EQ(radical(X * X - c(2)), X * X - c(2));
  EXPECT_EQ(radical(c(4) * X * X + c(8) * X + c(4)), X + c(1));
  EXPECT_THROW(radical(UniPoly()), std::domain_error);
}

TEST(Radical, SquarefreeDivisorWithSameRootsModP) {
  std::mt19937_64 rng(11);
  const long small_primes[] = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  for (int i = 0; i < 20; ++i) {
    const UniPoly base = random_poly(rng, 3, 6, true);
    const UniPoly f = base * base * random_poly(rng, 2, 6, true);
    const UniPoly r = radical(f);
    EXPECT_TRUE(is_squarefree(r));
    EXPECT_NO_THROW(exact_quotient(primitive_part(f), r));
    const Integer bad = f.lc() * discriminant(r);
    for (long p : small_primes) {
      if (mpz_divisible_ui_p(bad.get_mpz_t(), static_cast<unsigned long>(p))) continue;
      EXPECT_EQ(brute_roots(f, p), brute_roots(r, p));
    }
  }
}

TEST(Homogenize, Examples) {
  const UniPoly f = X * X - c(1);
  const BiPolyHom h2 = homogenize(f, 2);
  EXPECT_EQ(to_string(h2), "X^2 - Y^2");
  EXPECT_EQ(to_string(homogenize(f, 3)), "X^2*Y - Y^3");
  EXPECT_TRUE(homogenize(f, 3).has_infinity_root());
  EXPECT_EQ(dehomogenize(h2), f);
  EXPECT_THROW(homogenize(f, 1), std::invalid_argument);
}

TEST(ComposeHomogeneous, Examples) {
  const BiPolyHom XY(2, {Integer(0), Integer(1), Integer(0)});
  const RatFunc g{X * X + c(1), X * X - c(2), 2};
  // (X^2 + Y^2)(X^2 - 2Y^2) = X^4 - X^2 Y^2 - 2 Y^4
  EXPECT_EQ(compose_homogeneous(XY, g), BiPolyHom(4, {Integer(-2), Integer(0), Integer(-1), Integer(0), Integer(1)}));
  const BiPolyHom Y(1, {Integer(1), Integer(0)});
  EXPECT_EQ(compose_homogeneous(Y, g), homogenize(g.g2, 2));
  const BiPolyHom lin(1, {Integer(-2), Integer(1)});  // X - 2Y
  EXPECT_EQ(to_string(compose_homogeneous(lin, RatFunc{X * X, c(1), 2})), "X^2 - 2*Y^2");
}

TEST(ComposeHomogeneous, DegreeLawAndRootPreimages) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> small(-3, 3);
  for (int i = 0; i < 40; ++i) {
    // f with rational roots r1, r2 (finite)
    const long r1 = small(rng), r2 = r1 + 1 + (small(rng) + 3);
    const BiPolyHom f = BiPolyHom(1, {Integer(-r1), Integer(1)}) * BiPolyHom(1, {Integer(-r2), Integer(1)});
    const unsigned k = 2 + static_cast<unsigned>(i % 2);
    RatFunc g{random_poly(rng, static_cast<int>(k), 4), random_poly(rng, static_cast<int>(k), 4), k};
    if (!is_valid(g)) continue;
    const BiPolyHom comp = compose_homogeneous(f, g);
    EXPECT_EQ(comp.degree(), f.degree() * k);
    const UniPoly de = dehomogenize(comp);
    for (long num = -6; num <= 6; ++num)
      for (long den = 1; den <= 3; ++den) {
        const Rational x0 = make_rational(num, den);
        const Rational v1 = eval_rational(g.g1, x0), v2 = eval_rational(g.g2, x0);
        const bool hits = (v1 - r1 * v2 == 0) || (v1 - r2 * v2 == 0);
        EXPECT_EQ(!de.is_zero() && eval_rational(de, x0) == 0, hits);
      }
  }
}

TEST(Height, Examples) {
  EXPECT_EQ(height(c(3) * X * X - c(5) * X + c(2)), 5);
  EXPECT_EQ(height(RatFunc{X * X + c(1), X * X - c(2), 2}), 2);
  EXPECT_EQ(height(UniPoly()), 0);
}

TEST(RatFunc, Normalization) {
  const auto n = normalize(RatFunc{c(2) * X + c(2), c(-4) * X * X + c(4), 2});
  ASSERT_TRUE(n);
  EXPECT_EQ(n->g1, c(-1));
  EXPECT_EQ(n->g2, c(2) * X - c(2));
  EXPECT_FALSE(normalize(RatFunc{c(2) * X + c(2), X + c(1), 1}));
  EXPECT_FALSE(normalize(RatFunc{X, UniPoly(), 1}));
  EXPECT_FALSE(normalize(RatFunc{c(3), c(5), 1}));
}

TEST(RationalRoots, Examples) {
  const auto roots = rational_roots((c(2) * X - c(1)) * (X + c(3)) * X * (X * X + c(1)));
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_EQ(roots[0], -3);
  EXPECT_EQ(roots[1], 0);
  EXPECT_EQ(roots[2], make_rational(1, 2));
}

TEST(Forms, ProjectiveDiscriminantAndResultant) {
  const BiPolyHom XY(2, {Integer(0), Integer(1), Integer(0)});
  EXPECT_NE(projective_discriminant(XY), 0);
  const BiPolyHom YY(2, {Integer(1), Integer(0), Integer(0)});
  EXPECT_EQ(projective_discriminant(YY), 0);
  const BiPolyHom x2my2 = homogenize(X * X - c(1), 2);
  EXPECT_NE(form_resultant(XY, x2my2), 0);
  EXPECT_EQ(form_resultant(XY, BiPolyHom(1, {Integer(1), Integer(0)})), 0);  // share infinity
  EXPECT_EQ(to_string(projective_radical(homogenize((X - c(1)) * (X - c(1)), 4))), "X*Y - Y^2");  // roots 1 and infinity
}
