#ifndef RIORDAN_PARSE_HPP
#define RIORDAN_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/rational.hpp"
#include "riordan/series.hpp"

namespace riordan {

/// Abstract syntax of a generating-function expression:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' nonneg-integer)?
///   base   := rational | 'z' | '(' expr ')' | '-' base
/// Unicode minus is normalized to '-' while lexing; whitespace is
/// insignificant. Division is resolved at evaluation time and requires
/// a unit denominator.
struct Expr {
  enum class Kind { Literal, Variable, Negate, Add, Sub, Mul, Div, Pow };

  Kind kind;
  Rational literal;            // Literal
  unsigned long exponent = 0;  // Pow
  std::unique_ptr<Expr> lhs, rhs;

  static std::unique_ptr<Expr> make_literal(Rational v) {
    auto e = std::make_unique<Expr>();
    e->kind = Kind::Literal;
    e->literal = std::move(v);
    return e;
  }
  static std::unique_ptr<Expr> make_variable() {
    auto e = std::make_unique<Expr>();
    e->kind = Kind::Variable;
    return e;
  }
  static std::unique_ptr<Expr> make_unary(Kind k, std::unique_ptr<Expr> operand) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->lhs = std::move(operand);
    return e;
  }
  static std::unique_ptr<Expr> make_binary(Kind k, std::unique_ptr<Expr> l,
                                           std::unique_ptr<Expr> r) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }
  static std::unique_ptr<Expr> make_pow(std::unique_ptr<Expr> base, unsigned long exponent) {
    auto e = std::make_unique<Expr>();
    e->kind = Kind::Pow;
    e->exponent = exponent;
    e->lhs = std::move(base);
    return e;
  }
};

using ExprPtr = std::unique_ptr<Expr>;

namespace detail {

enum class TokenKind { Integer, Z, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokenKind kind;
  std::size_t position;  // 1-based
  BigInt value;          // Integer only
};

inline const char* token_name(TokenKind k) {
  switch (k) {
    case TokenKind::Integer: return "integer";
    case TokenKind::Z: return "'z'";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t pos = i + 1;
    // U+2212 (minus sign) pastes in from typeset formulas; treat as '-'.
    if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      tokens.push_back({TokenKind::Minus, pos, {}});
      i += 3;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tokens.push_back({TokenKind::Integer, pos, BigInt(text.substr(i, j - i))});
      i = j;
      continue;
    }
    TokenKind kind;
    switch (c) {
      case 'z': kind = TokenKind::Z; break;
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      default:
        throw ParseError(pos, {},
                         "syntax error at position " + std::to_string(pos) +
                             ": unexpected character '" + std::string(1, c) + "'");
    }
    tokens.push_back({kind, pos, {}});
    ++i;
  }
  tokens.push_back({TokenKind::End, text.size() + 1, {}});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    expect_end();
    return e;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  Token advance() { return tokens_[index_++]; }
  bool match(TokenKind k) {
    if (peek().kind != k) return false;
    ++index_;
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string msg = "syntax error at position " + std::to_string(peek().position) +
                      ": unexpected " + token_name(peek().kind) + ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += (i + 1 == expected.size()) ? " or " : ", ";
      msg += expected[i];
    }
    throw ParseError(peek().position, std::move(expected), msg);
  }

  void expect_end() {
    if (peek().kind != TokenKind::End) fail({"'+'", "'-'", "'*'", "'/'", "end of input"});
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (true) {
      if (match(TokenKind::Plus))
        e = Expr::make_binary(Expr::Kind::Add, std::move(e), term());
      else if (match(TokenKind::Minus))
        e = Expr::make_binary(Expr::Kind::Sub, std::move(e), term());
      else
        return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (true) {
      if (match(TokenKind::Star))
        e = Expr::make_binary(Expr::Kind::Mul, std::move(e), factor());
      else if (match(TokenKind::Slash))
        e = Expr::make_binary(Expr::Kind::Div, std::move(e), factor());
      else
        return e;
    }
  }

  ExprPtr factor() {
    ExprPtr e = base();
    if (match(TokenKind::Caret)) {
      if (peek().kind != TokenKind::Integer) fail({"integer"});
      const Token t = advance();
      if (!t.value.fits_ulong_p())
        throw ParseError(t.position, {"integer"},
                         "syntax error at position " + std::to_string(t.position) +
                             ": exponent too large");
      e = Expr::make_pow(std::move(e), t.value.get_ui());
    }
    return e;
  }

  ExprPtr base() {
    if (peek().kind == TokenKind::Integer) return Expr::make_literal(Rational(advance().value));
    if (match(TokenKind::Z)) return Expr::make_variable();
    if (match(TokenKind::Minus)) return Expr::make_unary(Expr::Kind::Negate, base());
    if (match(TokenKind::LParen)) {
      ExprPtr e = expr();
      if (!match(TokenKind::RParen)) fail({"')'"});
      return e;
    }
    fail({"integer", "'z'", "'('", "'-'"});
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace detail

/// Parses a generating-function expression; throws ParseError with a
/// 1-based position and the acceptable-token set on bad input.
inline ExprPtr parse_expression(const std::string& text) {
  return detail::Parser(detail::lex(text)).parse();
}

/// Evaluates to a series at the given truncation. Division requires a
/// unit denominator and fails with NotAUnitError otherwise.
inline Series evaluate(const Expr& e, std::size_t trunc) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return Series::constant(e.literal, trunc);
    case Expr::Kind::Variable:
      // at truncation 0 the image of z is the zero series
      return trunc == 0 ? Series::zero(0) : Series::z(trunc);
    case Expr::Kind::Negate:
      return -evaluate(*e.lhs, trunc);
    case Expr::Kind::Add:
      return evaluate(*e.lhs, trunc) + evaluate(*e.rhs, trunc);
    case Expr::Kind::Sub:
      return evaluate(*e.lhs, trunc) - evaluate(*e.rhs, trunc);
    case Expr::Kind::Mul:
      return evaluate(*e.lhs, trunc) * evaluate(*e.rhs, trunc);
    case Expr::Kind::Div: {
      const Series den = evaluate(*e.rhs, trunc);
      if (den.coeff(0).is_zero())
        throw NotAUnitError("division requires a unit denominator (nonzero constant term)");
      return evaluate(*e.lhs, trunc) * reciprocal(den);
    }
    case Expr::Kind::Pow:
      return pow(evaluate(*e.lhs, trunc), e.exponent);
  }
  throw Error("evaluate: unknown node");
}

inline Series evaluate_expression(const std::string& text, std::size_t trunc) {
  return evaluate(*parse_expression(text), trunc);
}

}  // namespace riordan

#endif  // RIORDAN_PARSE_HPP
