#include "ramex/parse.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

using namespace ramex;

namespace {

std::size_t error_offset(const std::string& text) {
  try {
    parse_form(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

// Random expression text over the given variables.
class ExprGen {
 public:
  ExprGen(std::uint64_t seed, std::vector<std::string> vars) : rng_(seed), vars_(std::move(vars)) {}

  std::string expr(int depth) {
    std::string s = (pick(4) == 0 ? "-" : "") + term(depth);
    for (int n = static_cast<int>(pick(3)); n > 0; --n) s += std::string(pick(2) ? " + " : " - ") + term(depth);
    return s;
  }

 private:
  std::string term(int depth) {
    std::string s = factor(depth);
    for (int n = static_cast<int>(pick(3)); n > 0; --n) s += (pick(2) ? "*" : " * ") + factor(depth);
    return s;
  }
  std::string factor(int depth) {
    std::string b = base(depth);
    if (pick(3) == 0) b += "^" + std::to_string(pick(4));
    return b;
  }
  std::string base(int depth) {
    const auto r = pick(depth > 0 ? 5 : 4);
    if (r == 4) return "(" + expr(depth - 1) + ")";
    if (r >= 2) return vars_[pick(vars_.size())];
    return std::to_string(pick(r == 0 ? 10 : 100000));
  }
  std::uint64_t pick(std::uint64_t n) { return rng_() % n; }

  std::mt19937_64 rng_;
  std::vector<std::string> vars_;
};

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(parse_form("X^2 - 2*Y^2"), BiPolyHom(2, {Integer(-2), Integer(0), Integer(1)}));
  const BiPolyT cover = parse_cover("X^2 - t");
  EXPECT_EQ(cover.degree(), 2);
  EXPECT_EQ(to_string(cover), "X^2 - t");
  EXPECT_EQ(error_offset("X^2 - Y"), 5u);
  EXPECT_EQ(parse_univariate("3*X^2 - 5*X + 2"), UniPoly({Integer(2), Integer(-5), Integer(3)}));
  EXPECT_EQ(parse_univariate("t^2 - 1", "t"), UniPoly({Integer(-1), Integer(0), Integer(1)}));
}

TEST(Parse, Structure) {
  EXPECT_EQ(to_string(parse_form("(X+Y)^2")), "X^2 + 2*X*Y + Y^2");
  EXPECT_EQ(to_string(parse_form("X*Y")), "X*Y");
  EXPECT_EQ(to_string(parse_form("-X*(X - Y)")), "-X^2 + X*Y");
  EXPECT_EQ(to_string(parse_form("  X  *  Y  ")), "X*Y");
  EXPECT_EQ(parse_univariate("2^10"), UniPoly::constant(Integer(1024)));
  EXPECT_EQ(parse_univariate("123456789012345678901234567890*X").lc(), Integer("123456789012345678901234567890"));
  EXPECT_EQ(parse_univariate("X^0"), UniPoly::constant(Integer(1)));
}

TEST(Parse, Errors) {
  EXPECT_EQ(error_offset("2X"), 1u);                 // implicit multiplication
  EXPECT_EQ(error_offset("X + Z"), 4u);              // unknown variable
  EXPECT_EQ(error_offset("(X + Y"), 6u);             // unclosed
  EXPECT_EQ(error_offset("X^"), 2u);                 // missing exponent
  EXPECT_EQ(error_offset("X^-1"), 2u);               // exponents are naturals
  EXPECT_EQ(error_offset("X + -Y"), 4u);             // unary minus only leads
  EXPECT_EQ(error_offset(""), 0u);
  EXPECT_EQ(error_offset("X^2 + (X + 1)*Y"), 5u);    // term itself inhomogeneous
  EXPECT_EQ(error_offset("X^99999"), 2u);
  EXPECT_THROW(parse_univariate("X*Y"), ParseError);
  EXPECT_THROW(parse_cover("X^2 - s"), ParseError);
}

TEST(Parse, RoundTripUnivariateAndCover) {
  ExprGen uni(11, {"X"}), cov(12, {"X", "t"});
  for (int i = 0; i < 250; ++i) {
    const std::string a = uni.expr(2);
    const UniPoly u = parse_univariate(a);
    EXPECT_EQ(parse_univariate(to_string(u, "X")), u) << a;
    const std::string b = cov.expr(2);
    const BiPolyT c = parse_cover(b);
    EXPECT_EQ(parse_cover(to_string(c)), c) << b;
  }
}

TEST(Parse, RoundTripForms) {
  // homogeneous by construction: sums of c * (product of d linear forms)
  std::mt19937_64 rng(13);
  auto r = [&](int n) { return static_cast<long>(rng() % static_cast<unsigned>(2 * n + 1)) - n; };
  for (int i = 0; i < 100; ++i) {
    const unsigned d = 1 + static_cast<unsigned>(rng() % 4);
    std::string text;
    for (int terms = 1 + static_cast<int>(rng() % 3); terms > 0; --terms) {
      text += text.empty() ? "" : " + ";
      text += std::to_string(std::labs(r(9)) + 1);
      for (unsigned j = 0; j < d; ++j) text += "*(" + std::to_string(std::labs(r(5))) + "*X - " + std::to_string(std::labs(r(5))) + "*Y)";
    }
    const BiPolyHom h = parse_form(text);
    if (h.is_zero()) continue;  // all-zero input carries no degree
    EXPECT_EQ(h.degree(), d);
    EXPECT_EQ(parse_form(to_string(h)), h) << text;
  }
}
