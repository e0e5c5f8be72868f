#include "ramex/modp.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

using namespace ramex;

namespace {

const UniPoly X = UniPoly::x();
UniPoly c(long v) { return UniPoly::constant(Integer(v)); }

BiPolyHom form(unsigned d, std::vector<long> coeffs) {
  std::vector<Integer> v(coeffs.begin(), coeffs.end());
  return BiPolyHom(d, v);
}

PolyModP random_modp(std::mt19937_64& rng, u64 p, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<u64> cs(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : cs) x = rng() % p;
  if (cs.back() == 0) cs.back() = 1;
  return PolyModP(p, cs);
}

unsigned brute_count(const PolyModP& f) {
  unsigned n = 0;
  for (u64 x = 0; x < f.p(); ++x) n += f.eval(x) == 0;
  return n;
}

}  // namespace

namespace ramex {
void PrintTo(const CycleType& c, std::ostream* os) { *os << "{" << c.str() << "}"; }
}  // namespace ramex

TEST(Prime, MillerRabin) {
  EXPECT_TRUE(is_prime_u64(2));
  EXPECT_TRUE(is_prime_u64(1000000007));
  EXPECT_FALSE(is_prime_u64(1));
  EXPECT_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
  EXPECT_TRUE(is_prime_u64((u64(1) << 61) - 1));
  EXPECT_THROW(Prime(91), std::invalid_argument);
  const auto sieve = primes_up_to(10000);
  EXPECT_EQ(sieve.size(), 1229u);
  for (u64 n = 0; n < 2000; ++n)
    EXPECT_EQ(is_prime_u64(n), std::binary_search(sieve.begin(), sieve.end(), n));
}

TEST(Reduce, Examples) {
  auto r1 = reduce_mod_p(X * X - c(10), 5);
  EXPECT_EQ(r1.poly, PolyModP(5, {0, 0, 1}));
  EXPECT_FALSE(r1.degree_drop);
  auto r2 = reduce_mod_p(c(5) * X * X + X + c(1), 5);
  EXPECT_EQ(r2.poly, PolyModP(5, {1, 1}));
  EXPECT_TRUE(r2.degree_drop);
  EXPECT_EQ(reduce_mod_p(X * X - c(2), 7).poly, PolyModP(7, {5, 0, 1}));
  EXPECT_TRUE(reduce_mod_p(c(5) * X + c(10), 5).content_divisible);
}

TEST(CountRoots, Examples) {
  EXPECT_EQ(count_roots_mod_p(reduce_mod_p(X * X - c(1), 7).poly), 2u);
  EXPECT_EQ(count_roots_mod_p(reduce_mod_p(X * X + c(1), 3).poly), 0u);
  const PolyModP f = reduce_mod_p((X * X + c(1)) * (X * X - c(2)), 3).poly;
  EXPECT_EQ(count_roots_mod_p(f), 0u);
  EXPECT_EQ(brute_count(f), 0u);
  EXPECT_THROW(count_roots_mod_p(PolyModP(7)), std::domain_error);
}

TEST(CountRoots, MatchesBruteForceForAllSmallPrimes) {
  std::mt19937_64 rng(17);
  for (u64 p : primes_up_to(97)) {
    for (int i = 0; i < 200; ++i) {
      PolyModP f = random_modp(rng, p, 8);
      EXPECT_EQ(count_roots_mod_p(f), brute_count(f)) << "p=" << p;
    }
  }
}

TEST(ProjectiveRoots, Examples) {
  const BiPolyHom XY = form(2, {0, 1, 0});
  for (u64 p : {2, 3, 5, 11, 101}) EXPECT_EQ(count_projective_roots(XY, p), 2u);
  // (X^2 + Y^2)(X^2 - 2Y^2) = X^4 - X^2Y^2 - 2Y^4
  const BiPolyHom m = form(4, {-2, 0, -1, 0, 1});
  EXPECT_EQ(count_projective_roots(m, 3), 0u);
  EXPECT_EQ(count_projective_roots(form(2, {-1, 0, 1}), 5), 2u);
  EXPECT_THROW(count_projective_roots(form(2, {5, 0, 5}), 5), std::domain_error);
}

TEST(SplitsCompletely, Examples) {
  EXPECT_TRUE(splits_completely(form(2, {0, 1, 0}), 11));
  // X(X - Y)(X + Y) = X^3 - XY^2
  EXPECT_TRUE(splits_completely(form(3, {0, -1, 0, 1}), 11));
  EXPECT_FALSE(splits_completely(form(2, {1, 0, 1}), 7));
  EXPECT_TRUE(splits_completely(form(2, {1, 0, 1}), 13));
}

TEST(Factor, X4PlusXPlus1IrreducibleOverF2) {
  const PolyModP f(2, {1, 1, 0, 0, 1});
  // oracle: no divisor among all polynomials of degree 1 and 2 over F_2
  for (u64 bits = 2; bits < 8; ++bits) {
    std::vector<u64> cs;
    for (u64 b = bits; b; b >>= 1) cs.push_back(b & 1);
    const PolyModP d(2, cs);
    if (d.degree() < 1) continue;
    EXPECT_FALSE((f % d).is_zero()) << bits;
  }
  const Factorization fac = factor_mod_p(f);
  ASSERT_EQ(fac.factors.size(), 1u);
  EXPECT_EQ(fac.factors[0].first, f);
  EXPECT_EQ(fac.factors[0].second, 1u);
}

TEST(Factor, Examples) {
  const Factorization a = factor_mod_p(reduce_mod_p(X * X - c(1), 7).poly);
  ASSERT_EQ(a.factors.size(), 2u);
  EXPECT_EQ(a.factors[0].first, PolyModP(7, {1, 1}));
  EXPECT_EQ(a.factors[1].first, PolyModP(7, {6, 1}));
  for (u64 p : {2, 3, 5, 7, 13}) {
    std::vector<u64> cs(p + 1, 0);
    cs[p] = 1;
    cs[1] = p - 1;
    const Factorization fac = factor_mod_p(PolyModP(p, cs));
    ASSERT_EQ(fac.factors.size(), p);
    for (const auto& [g, m] : fac.factors) {
      EXPECT_EQ(g.degree(), 1);
      EXPECT_EQ(m, 1u);
    }
  }
}

TEST(Factor, RecombinationIrreducibilityAndDeterminism) {
  std::mt19937_64 rng(123);
  const auto primes = primes_up_to(10000);
  for (int i = 0; i < 1000; ++i) {
    const u64 p = primes[rng() % primes.size()];
    PolyModP f = random_modp(rng, p, 10);
    if (i % 7 == 0) f = f * f;  // exercise multiplicities
    if (i % 11 == 0 && p < 50) {
      std::vector<u64> cs(p * 2 + 1, 0);  // f(X^p) style inputs
      for (std::size_t j = 0; j < cs.size(); j += p) cs[j] = rng() % p;
      cs.back() = 1;
      f = PolyModP(p, cs);
    }
    const Factorization fac = factor_mod_p(f, 42);
    PolyModP prod = PolyModP::constant(p, fac.unit);
    std::set<std::vector<u64>> seen;
    for (const auto& [g, m] : fac.factors) {
      EXPECT_EQ(g.lc(), 1u);
      EXPECT_TRUE(seen.insert(g.coeffs()).second);
      // Ben-Or style irreducibility check
      PolyModP h = PolyModP::x(p);
      for (int d = 1; 2 * d <= g.degree(); ++d) {
        h = powmod(h, p, g);
        EXPECT_EQ(gcd(h - PolyModP::x(p), g).degree(), 0);
      }
      for (unsigned j = 0; j < m; ++j) prod = prod * g;
    }
    EXPECT_EQ(prod, f);
    const Factorization again = factor_mod_p(f, 42);
    EXPECT_EQ(again.factors, fac.factors);
  }
}

TEST(CycleType, Examples) {
  const UniPoly cubic = X * X * X - X - c(1);
  // No root mod 2 by scan, so the cubic is irreducible there.
  EXPECT_EQ(cycle_type(cubic, 2), CycleType({3}));
  // 2^3 - 2 - 1 = 5: mod 5 there is exactly one root, leaving a quadratic.
  EXPECT_EQ(brute_count(reduce_mod_p(cubic, 5).poly), 1u);
  EXPECT_EQ(cycle_type(cubic, 5), CycleType({1, 2}));
  // p = 59: oracle is the full factorization degrees
  const Factorization fac = factor_mod_p(reduce_mod_p(cubic, 59).poly);
  std::vector<unsigned> degs;
  for (const auto& [g, m] : fac.factors) degs.push_back(static_cast<unsigned>(g.degree()));
  EXPECT_EQ(cycle_type(cubic, 59), CycleType(degs));
  EXPECT_EQ(cycle_type(X * X - c(1), 7), CycleType({1, 1}));
}

TEST(CycleType, SumsToDegreeAndMatchesProjectiveSplitting) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int i = 0; i < 60; ++i) {
    const unsigned d = 2 + static_cast<unsigned>(i % 4);
    std::vector<Integer> cs(d + 1);
    for (auto& x : cs) x = coef(rng);
    if (i % 3 == 0) cs[d] = 0;  // root at infinity
    const BiPolyHom h(d, cs);
    if (h.is_zero() || projective_discriminant(h) == 0) continue;
    const GoodPrimeTest good(h);
    for (u64 p : primes_up_to(300)) {
      if (!good(p)) continue;
      const CycleType ct = cycle_type(h, p);
      EXPECT_EQ(ct.total(), d);
      EXPECT_EQ(splits_completely(h, p), ct.all_ones());
      EXPECT_EQ(count_projective_roots(h, p), ct.fixed_points());
    }
  }
}

TEST(GoodPrimes, Filter) {
  const GoodPrimeTest g(c(3) * X * X - c(2));  // lc 3, disc 24
  EXPECT_FALSE(g(2));
  EXPECT_FALSE(g(3));
  EXPECT_TRUE(g(5));
  EXPECT_THROW(GoodPrimeTest(form(2, {1, 0, 0})), std::domain_error);
}
