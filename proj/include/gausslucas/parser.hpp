#pragma once

// Text format for polynomials.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | factor
//   factor := atom ('^' digits)?
//   atom   := number | number 'i' | 'i' | 'z' digits | '(' expr ')'
//
// Unary minus applies to a whole factor, so "-z1^2" is -(z1^2). There is no
// implicit multiplication: "2z1" is rejected.

#include <array>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gausslucas/poly.hpp"

namespace gausslucas {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset, std::string expected = {})
      : Error(message + " at offset " + std::to_string(offset) +
              (expected.empty() ? std::string{} : " (expected " + expected + ")")),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

enum class TokenKind { number, imaginary, variable, plus, minus, star, caret, lparen, rparen, end };

struct Token {
  TokenKind kind = TokenKind::end;
  double value = 0;       // number / imaginary
  std::size_t var = 0;    // variable index
  std::size_t offset = 0;
  std::string_view text;
};

inline constexpr std::size_t kMaxVariables = 64;
inline constexpr unsigned kMaxExponent = 4096;

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

inline std::size_t scan_digits(std::string_view s, std::size_t i) {
  while (i < s.size() && is_digit(s[i])) ++i;
  return i;
}

}  // namespace detail

inline std::vector<Token> tokenize(std::string_view text) {
  using detail::is_digit;
  using detail::scan_digits;
  std::vector<Token> out;
  std::size_t i = 0;
  auto single = [&](TokenKind kind) {
    out.push_back({kind, 0, 0, i, text.substr(i, 1)});
    ++i;
  };
  while (i < text.size()) {
    const char ch = text[i];
    switch (ch) {
      case ' ': case '\t': case '\n': case '\r': ++i; continue;
      case '+': single(TokenKind::plus); continue;
      case '-': single(TokenKind::minus); continue;
      case '*': single(TokenKind::star); continue;
      case '^': single(TokenKind::caret); continue;
      case '(': single(TokenKind::lparen); continue;
      case ')': single(TokenKind::rparen); continue;
      case 'i': out.push_back({TokenKind::imaginary, 1.0, 0, i, text.substr(i, 1)}); ++i; continue;
      default: break;
    }
    const std::size_t start = i;
    if (ch == 'z') {
      const std::size_t end = scan_digits(text, i + 1);
      if (end == i + 1) throw ParseError("variable name without index", i, "digits after 'z'");
      std::size_t index = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + i + 1, text.data() + end, index);
      if (ec != std::errc{} || index > kMaxVariables)
        throw ParseError("variable index too large", i, "index <= " + std::to_string(kMaxVariables));
      if (index == 0) throw ParseError("variable index 0", i, "index >= 1");
      out.push_back({TokenKind::variable, 0, index, i, text.substr(i, end - i)});
      i = end;
      continue;
    }
    if (is_digit(ch) || ch == '.') {
      std::size_t end = scan_digits(text, i);
      bool any_digit = end > i;
      if (end < text.size() && text[end] == '.') {
        const std::size_t frac = scan_digits(text, end + 1);
        any_digit = any_digit || frac > end + 1;
        end = frac;
      }
      if (!any_digit) throw ParseError("malformed number", start, "digit");
      if (end < text.size() && (text[end] == 'e' || text[end] == 'E')) {
        std::size_t e = end + 1;
        if (e < text.size() && (text[e] == '+' || text[e] == '-')) ++e;
        const std::size_t exp_end = scan_digits(text, e);
        if (exp_end == e) throw ParseError("malformed number exponent", end, "digits");
        end = exp_end;
      }
      const std::string lexeme(text.substr(start, end - start));
      const double value = std::strtod(lexeme.c_str(), nullptr);
      if (!std::isfinite(value)) throw ParseError("number out of range", start);
      if (end < text.size() && text[end] == 'i') {
        out.push_back({TokenKind::imaginary, value, 0, start, text.substr(start, end + 1 - start)});
        i = end + 1;
      } else {
        out.push_back({TokenKind::number, value, 0, start, text.substr(start, end - start)});
        i = end;
      }
      continue;
    }
    throw ParseError("unexpected character", i, "number, variable, operator or parenthesis");
  }
  out.push_back({TokenKind::end, 0, 0, text.size(), {}});
  return out;
}

namespace detail {

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::size_t num_vars) : tokens_(std::move(tokens)), num_vars_(num_vars) {}

  MultiPoly parse() {
    MultiPoly p = expr(0);
    if (peek().kind != TokenKind::end) throw ParseError("unexpected token", peek().offset, "operator or end of input");
    return p;
  }

 private:
  static constexpr int kMaxDepth = 200;
  static constexpr std::size_t kMaxWork = 4'000'000;

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  MultiPoly expr(int depth) {
    if (depth > kMaxDepth) throw ParseError("expression nested too deeply", peek().offset);
    MultiPoly acc = term(depth);
    while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
      const Token& op = next();
      MultiPoly rhs = term(depth);
      acc = guarded(op.offset, [&] { return op.kind == TokenKind::plus ? acc + rhs : acc - rhs; });
    }
    return acc;
  }

  MultiPoly term(int depth) {
    MultiPoly acc = unary(depth);
    while (peek().kind == TokenKind::star) {
      const Token& op = next();
      MultiPoly rhs = unary(depth);
      acc = multiply(acc, rhs, op.offset);
    }
    return acc;
  }

  MultiPoly unary(int depth) {
    if (peek().kind == TokenKind::minus) {
      const Token& op = next();
      if (depth > kMaxDepth) throw ParseError("expression nested too deeply", op.offset);
      MultiPoly inner = unary(depth + 1);
      return guarded(op.offset, [&] { return poly_scale(inner, -1.0); });
    }
    return factor(depth);
  }

  MultiPoly factor(int depth) {
    MultiPoly base = atom(depth);
    if (peek().kind != TokenKind::caret) return base;
    const Token& caret = next();
    const Token& e = peek();
    const bool integer_literal =
        e.kind == TokenKind::number &&
        std::all_of(e.text.begin(), e.text.end(), [](char c) { return is_digit(c); });
    if (!integer_literal) throw ParseError("exponent must be a nonnegative integer literal", e.offset, "digits");
    unsigned n = 0;
    const auto [ptr, ec] = std::from_chars(e.text.data(), e.text.data() + e.text.size(), n);
    if (ec != std::errc{} || n > kMaxExponent) throw ParseError("exponent too large", e.offset);
    next();
    MultiPoly result = MultiPoly::constant(num_vars_, 1.0);
    for (unsigned j = 0; j < n; ++j) result = multiply(result, base, caret.offset);
    return result;
  }

  MultiPoly atom(int depth) {
    const Token& t = next();
    switch (t.kind) {
      case TokenKind::number:
        return MultiPoly::constant(num_vars_, t.value);
      case TokenKind::imaginary:
        return MultiPoly::constant(num_vars_, Complex{0.0, t.value});
      case TokenKind::variable:
        return MultiPoly::variable(num_vars_, t.var);
      case TokenKind::lparen: {
        MultiPoly inner = expr(depth + 1);
        if (peek().kind != TokenKind::rparen) throw ParseError("unbalanced parenthesis", peek().offset, "')'");
        next();
        return inner;
      }
      default:
        throw ParseError(t.kind == TokenKind::end ? "unexpected end of input" : "unexpected token", t.offset,
                         "number, variable, 'i' or '('");
    }
  }

  MultiPoly multiply(const MultiPoly& a, const MultiPoly& b, std::size_t offset) {
    work_ += a.size() * b.size();
    if (work_ > kMaxWork) throw ParseError("expression too large to expand", offset);
    return guarded(offset, [&] { return a * b; });
  }

  template <class F>
  MultiPoly guarded(std::size_t offset, F&& f) {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(std::string("arithmetic failed: ") + e.what(), offset);
    }
  }

  std::vector<Token> tokens_;
  std::size_t num_vars_;
  std::size_t pos_ = 0;
  std::size_t work_ = 0;
};

}  // namespace detail

/// Parses and fully expands an expression. The variable count is the largest
/// index seen (at least 1) unless `expected_vars` is supplied.
inline MultiPoly parse_poly(std::string_view text, std::optional<std::size_t> expected_vars = std::nullopt) {
  std::vector<Token> tokens = tokenize(text);
  std::size_t max_index = 0;
  for (const Token& t : tokens) {
    if (t.kind != TokenKind::variable) continue;
    if (expected_vars && t.var > *expected_vars)
      throw ParseError("variable z" + std::to_string(t.var) + " exceeds declared variable count", t.offset,
                       "index <= " + std::to_string(*expected_vars));
    max_index = std::max(max_index, t.var);
  }
  std::size_t num_vars = expected_vars.value_or(std::max<std::size_t>(max_index, 1));
  if (num_vars == 0) throw ParseError("declared variable count must be positive", 0);
  return detail::Parser(std::move(tokens), num_vars).parse();
}

namespace detail {

inline std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

inline std::string format_monomial(const Monomial& m) {
  std::string s;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'z' + std::to_string(j + 1);
    if (m[j] > 1) s += '^' + std::to_string(m[j]);
  }
  return s;
}

}  // namespace detail

/// Renders terms in graded-lex order, leading term first. Doubles use the
/// shortest round-trip form, so parse_poly(format_poly(p), p.num_vars())
/// reproduces the term map exactly.
inline std::string format_poly(const MultiPoly& p) {
  if (p.is_null()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const bool constant_term = total_degree(m) == 0;
    bool negative = false;
    std::string coeff;
    if (c.imag() == 0) {
      negative = c.real() < 0;
      coeff = detail::format_double(std::abs(c.real()));
    } else if (c.real() == 0) {
      negative = c.imag() < 0;
      coeff = detail::format_double(std::abs(c.imag())) + "i";
    } else {
      coeff = "(" + detail::format_double(c.real()) + (c.imag() < 0 ? "-" : "+") +
              detail::format_double(std::abs(c.imag())) + "i)";
    }
    std::string body;
    if (constant_term) {
      body = coeff;
    } else if (coeff == "1") {
      body = detail::format_monomial(m);
    } else {
      body = coeff + "*" + detail::format_monomial(m);
    }
    if (out.empty()) {
      out = (negative ? "-" : "") + body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace gausslucas
