#pragma once

/**
 * @file parse.hpp
 * @brief Recursive-descent parser for polynomial input.
 *
 *   expr   := ['-'] term (('+' | '-') term)*
 *   term   := factor ('*' factor)*
 *   factor := base ('^' natural)?
 *   base   := integer | variable | '(' expr ')'
 *
 * Whitespace is insignificant; implicit multiplication is rejected. Every
 * error carries the byte offset where it was detected.
 */

#include "ramex/forms.hpp"
#include "ramex/integer.hpp"
#include "ramex/poly.hpp"

#include <array>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ramex {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr unsigned kMaxExponent = 4096;

/// Sparse polynomial in at most two variables: exponent pair -> coefficient.
using SparsePoly = std::map<std::array<unsigned, 2>, Integer>;

namespace detail {

inline void add_term(SparsePoly& p, const std::array<unsigned, 2>& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = p.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

inline SparsePoly sparse_mul(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_term(r, {ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
  return r;
}

inline SparsePoly sparse_pow(const SparsePoly& a, unsigned e) {
  SparsePoly r{{{0, 0}, Integer(1)}};
  for (unsigned i = 0; i < e; ++i) r = sparse_mul(r, a);
  return r;
}

class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string> vars) : s_(text), vars_(std::move(vars)) {}

  // Top-level expression; records where each top-level term starts.
  SparsePoly parse_all() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty expression");
    SparsePoly v = expr(true);
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, "unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

  struct TopTerm {
    std::size_t offset;
    SparsePoly value;  // signed
  };
  const std::vector<TopTerm>& top_terms() const { return top_; }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SparsePoly expr(bool top) {
    std::size_t start = pos_;
    skip();
    bool negate = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      negate = true;
      ++pos_;
    }
    SparsePoly acc;
    for (;;) {
      SparsePoly t = term();
      if (negate)
        for (auto& [e, c] : t) c = -c;
      if (top) top_.push_back({start, t});
      for (const auto& [e, c] : t) add_term(acc, e, c);
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        negate = s_[pos_] == '-';
        start = ++pos_;
        continue;
      }
      return acc;
    }
  }

  SparsePoly term() {
    SparsePoly v = factor();
    while (eat('*')) v = sparse_mul(v, factor());
    return v;
  }

  SparsePoly factor() {
    SparsePoly b = base();
    if (eat('^')) {
      skip();
      const std::size_t at = pos_;
      const std::string digits = read_digits();
      if (digits.empty()) throw ParseError(at, "expected exponent");
      if (digits.size() > 5 || std::stoul(digits) > kMaxExponent) throw ParseError(at, "exponent too large");
      b = sparse_pow(b, static_cast<unsigned>(std::stoul(digits)));
    }
    return b;
  }

  SparsePoly base() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Integer v(read_digits());
      SparsePoly p;
      add_term(p, {0, 0}, v);
      return p;
    }
    if (c == '(') {
      ++pos_;
      SparsePoly v = expr(false);
      if (!eat(')')) throw ParseError(pos_, "expected ')'");
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      std::string name;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] != name) continue;
        std::array<unsigned, 2> e{0, 0};
        e[i] = 1;
        return SparsePoly{{e, Integer(1)}};
      }
      std::string allowed;
      for (const auto& v : vars_) allowed += (allowed.empty() ? "" : ", ") + v;
      throw ParseError(at, "unknown variable '" + name + "' (expected one of: " + allowed + ")");
    }
    throw ParseError(pos_, "unexpected '" + std::string(1, c) + "'");
  }

  std::string read_digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    return d;
  }

  std::string_view s_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
  std::vector<TopTerm> top_;
};

}  // namespace detail

/// Parses over the given variables (at most two).
inline SparsePoly parse_sparse(std::string_view text, const std::vector<std::string>& vars) {
  if (vars.size() > 2) throw std::invalid_argument("parse_sparse: at most two variables");
  return detail::Parser(text, vars).parse_all();
}

/// Binary form in X, Y. Each top-level term must be homogeneous of the
/// common degree; the first offender is reported at its offset.
inline BiPolyHom parse_form(std::string_view text) {
  detail::Parser p(text, {"X", "Y"});
  const SparsePoly v = p.parse_all();
  int degree = -1;
  for (const auto& t : p.top_terms()) {
    for (const auto& [e, c] : t.value) {
      const int d = static_cast<int>(e[0] + e[1]);
      if (degree < 0) degree = d;
      if (d != degree) throw ParseError(t.offset, "inhomogeneous term (expected degree " + std::to_string(degree) + ")");
    }
  }
  // a homogeneous-looking sum can still cancel; degree stays as written
  const unsigned deg = degree < 0 ? 0u : static_cast<unsigned>(degree);
  std::vector<Integer> coeffs(deg + 1, Integer(0));
  for (const auto& [e, c] : v) coeffs[e[0]] = c;
  return BiPolyHom(deg, std::move(coeffs));
}

/// Univariate polynomial in `var`.
inline UniPoly parse_univariate(std::string_view text, const std::string& var = "X") {
  const SparsePoly v = parse_sparse(text, {var});
  unsigned deg = 0;
  for (const auto& [e, c] : v) deg = std::max(deg, e[0]);
  std::vector<Integer> coeffs(deg + 1, Integer(0));
  for (const auto& [e, c] : v) coeffs[e[0]] = c;
  return UniPoly(std::move(coeffs));
}

/// Defining polynomial f(t, X) as a polynomial in X over Z[t].
inline BiPolyT parse_cover(std::string_view text) {
  const SparsePoly v = parse_sparse(text, {"X", "t"});
  unsigned dx = 0, dt = 0;
  for (const auto& [e, c] : v) {
    dx = std::max(dx, e[0]);
    dt = std::max(dt, e[1]);
  }
  std::vector<std::vector<Integer>> grid(dx + 1, std::vector<Integer>(dt + 1, Integer(0)));
  for (const auto& [e, c] : v) grid[e[0]][e[1]] = c;
  std::vector<UniPoly> cs;
  for (auto& row : grid) cs.emplace_back(std::move(row));
  return BiPolyT(std::move(cs));
}

}  // namespace ramex
