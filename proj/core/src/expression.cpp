#include "ratsos/expression.hpp"

#include <cctype>
#include <limits>

#include "lexer.hpp"
#include "ratsos/error.hpp"

namespace ratsos {

namespace detail {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

}  // namespace

std::vector<Token> lex_line(std::string_view text, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t column = i + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) != 0) ++j;
      out.push_back({TokenKind::Integer, std::string(text.substr(i, j - i)), column});
      i = j;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({TokenKind::Identifier, std::string(text.substr(i, j - i)), column});
      i = j;
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case ':': kind = TokenKind::Colon; break;
      default:
        throw ParseError(line, column, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), column});
    ++i;
  }
  out.push_back({TokenKind::End, "", text.size() + 1});
  return out;
}

std::string describe(const Token& t) {
  if (t.kind == TokenKind::End) return "end of line";
  return "'" + t.text + "'";
}

ExpressionParser::ExpressionParser(const std::vector<Token>& tokens, std::size_t pos,
                                   const std::vector<std::string>& variables, std::size_t line)
    : tokens_(tokens), pos_(pos), variables_(variables), line_(line) {}

void ExpressionParser::fail(const Token& at, const std::string& message) const {
  throw ParseError(line_, at.column, message);
}

void ExpressionParser::expect(TokenKind kind, const std::string& what) {
  if (peek().kind != kind) fail(peek(), "expected " + what + ", found " + describe(peek()));
  ++pos_;
}

RatPoly ExpressionParser::parse_to_end() {
  RatPoly out = expr();
  if (peek().kind != TokenKind::End) fail(peek(), "unexpected " + describe(peek()));
  return out;
}

Rat ExpressionParser::parse_signed_rational() {
  bool negative = false;
  if (peek().kind == TokenKind::Minus) {
    negative = true;
    ++pos_;
  }
  if (peek().kind != TokenKind::Integer) fail(peek(), "expected a rational number, found " + describe(peek()));
  const Rat r = rational_literal();
  return negative ? -r : r;
}

Rat ExpressionParser::rational_literal() {
  const Token& num = peek();
  ++pos_;
  if (peek().kind != TokenKind::Slash) return Rat(Integer(num.text, 10));
  ++pos_;
  const Token& den = peek();
  if (den.kind != TokenKind::Integer) fail(den, "expected a positive integer denominator, found " + describe(den));
  ++pos_;
  const Integer d(den.text, 10);
  if (d == 0) fail(den, "denominator must be positive");
  return Rat(Integer(num.text, 10), d);
}

RatPoly ExpressionParser::expr() {
  RatPoly acc = term();
  while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
    const bool minus = peek().kind == TokenKind::Minus;
    ++pos_;
    RatPoly rhs = term();
    if (minus) {
      acc -= rhs;
    } else {
      acc += rhs;
    }
  }
  return acc;
}

RatPoly ExpressionParser::term() {
  RatPoly acc = unary();
  while (peek().kind == TokenKind::Star) {
    ++pos_;
    acc *= unary();
  }
  return acc;
}

RatPoly ExpressionParser::unary() {
  if (peek().kind == TokenKind::Minus) {
    ++pos_;
    return -unary();
  }
  if (peek().kind == TokenKind::Plus) {
    ++pos_;
    return unary();
  }
  return power();
}

RatPoly ExpressionParser::power() {
  RatPoly base = primary();
  if (peek().kind != TokenKind::Caret) return base;
  ++pos_;
  const Token& e = peek();
  if (e.kind != TokenKind::Integer) {
    fail(e, "expected a nonnegative integer exponent after '^', found " + describe(e));
  }
  ++pos_;
  const Integer value(e.text, 10);
  if (value > std::numeric_limits<unsigned>::max()) fail(e, "exponent too large");
  return pow(base, static_cast<unsigned>(value.get_ui()));
}

RatPoly ExpressionParser::primary() {
  const Token& t = peek();
  const std::size_t n = variables_.size();
  switch (t.kind) {
    case TokenKind::Integer:
      return RatPoly::constant(n, rational_literal());
    case TokenKind::Identifier: {
      for (std::size_t i = 0; i < n; ++i) {
        if (variables_[i] == t.text) {
          ++pos_;
          return RatPoly::variable(n, i);
        }
      }
      fail(t, "unknown identifier '" + t.text + "'");
    }
    case TokenKind::LParen: {
      ++pos_;
      RatPoly inner = expr();
      expect(TokenKind::RParen, "')'");
      return inner;
    }
    default:
      fail(t, "expected an expression, found " + describe(t));
  }
}

}  // namespace detail

RatPoly parse_expression(std::string_view text, const std::vector<std::string>& variables,
                         std::size_t line) {
  const auto tokens = detail::lex_line(text, line);
  detail::ExpressionParser parser(tokens, 0, variables, line);
  return parser.parse_to_end();
}

}  // namespace ratsos
