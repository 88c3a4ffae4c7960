#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ratsos/mpoly.hpp"

namespace ratsos::detail {

enum class TokenKind { Integer, Identifier, Plus, Minus, Star, Slash, Caret, LParen, RParen, Colon, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t column;
};

/// Splits one line; '#' starts a comment. The result always ends with End.
std::vector<Token> lex_line(std::string_view text, std::size_t line);

std::string describe(const Token& t);

/// Recursive-descent parser over a token range of one line.
class ExpressionParser {
 public:
  ExpressionParser(const std::vector<Token>& tokens, std::size_t pos,
                   const std::vector<std::string>& variables, std::size_t line);

  /// Parses up to End; trailing tokens are an error.
  RatPoly parse_to_end();
  /// integer | integer "/" positive-integer, with an optional leading '-'.
  Rat parse_signed_rational();

  std::size_t position() const noexcept { return pos_; }
  const Token& peek() const { return tokens_[pos_]; }
  void expect(TokenKind kind, const std::string& what);

 private:
  RatPoly expr();
  RatPoly term();
  RatPoly unary();
  RatPoly power();
  RatPoly primary();
  Rat rational_literal();
  [[noreturn]] void fail(const Token& at, const std::string& message) const;

  const std::vector<Token>& tokens_;
  std::size_t pos_;
  const std::vector<std::string>& variables_;
  std::size_t line_;
};

}  // namespace ratsos::detail
