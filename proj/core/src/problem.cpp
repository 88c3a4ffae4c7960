#include "ratsos/problem.hpp"

#include <algorithm>

#include "lexer.hpp"
#include "ratsos/error.hpp"

namespace ratsos {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Sum: return "sum";
    case Mode::Trace: return "trace";
    case Mode::Signed: return "signed";
  }
  return "sum";
}

std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "sum") return Mode::Sum;
  if (s == "trace") return Mode::Trace;
  if (s == "signed") return Mode::Signed;
  return std::nullopt;
}

namespace {

using detail::ExpressionParser;
using detail::Token;
using detail::TokenKind;

UniPoly to_unipoly(const RatPoly& p) {
  std::vector<Rat> coeffs(p.degree() + 1, Rat(0));
  for (const auto& [e, c] : p.terms()) coeffs[e[0]] = c;
  return UniPoly(std::move(coeffs));
}

class ProblemReader {
 public:
  Problem read(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      handle_line(line, line_no);
      start = end + 1;
    }
    if (!have_field_) throw ParseError(line_no, 1, "missing 'field' declaration");
    if (!have_vars_) throw ParseError(line_no, 1, "missing 'vars' declaration");
    return std::move(problem_);
  }

 private:
  void handle_line(std::string_view line, std::size_t line_no) {
    const auto tokens = detail::lex_line(line, line_no);
    if (tokens.front().kind == TokenKind::End) return;
    const Token& keyword = tokens.front();
    if (keyword.kind != TokenKind::Identifier) {
      throw ParseError(line_no, keyword.column, "expected a keyword, found " + detail::describe(keyword));
    }
    if (keyword.text == "field") {
      field(tokens, line_no);
    } else if (keyword.text == "vars") {
      vars(tokens, line_no);
    } else if (keyword.text == "mode") {
      mode(tokens, line_no);
    } else if (keyword.text == "term") {
      term(tokens, line_no);
    } else if (keyword.text == "target") {
      target(tokens, line_no);
    } else {
      throw ParseError(line_no, keyword.column, "unknown keyword '" + keyword.text + "'");
    }
  }

  void field(const std::vector<Token>& tokens, std::size_t line_no) {
    if (have_field_) throw ParseError(line_no, tokens[0].column, "duplicate 'field' declaration");
    const Token& name = tokens[1];
    if (name.kind != TokenKind::Identifier) {
      throw ParseError(line_no, name.column, "expected the field variable name, found " + detail::describe(name));
    }
    if (std::find(problem_.vars.begin(), problem_.vars.end(), name.text) != problem_.vars.end()) {
      throw ParseError(line_no, name.column, "field variable '" + name.text + "' clashes with a polynomial variable");
    }
    const std::vector<std::string> names{name.text};
    ExpressionParser parser(tokens, 2, names, line_no);
    parser.expect(TokenKind::Colon, "':'");
    const UniPoly u = to_unipoly(parser.parse_to_end());
    if (u.degree() < 1 || !u.is_monic()) {
      throw PreconditionError("field polynomial must be monic of degree >= 1, got " + u.str(name.text));
    }
    if (!is_squarefree(u)) {
      throw NotSquarefreeError("field polynomial " + u.str(name.text) +
                               " is not squarefree: gcd(u, u') = " + gcd(u, u.derivative()).str(name.text));
    }
    problem_.theta = name.text;
    problem_.u = u;
    have_field_ = true;
  }

  void vars(const std::vector<Token>& tokens, std::size_t line_no) {
    if (have_vars_) throw ParseError(line_no, tokens[0].column, "duplicate 'vars' declaration");
    for (std::size_t i = 1; tokens[i].kind != TokenKind::End; ++i) {
      const Token& t = tokens[i];
      if (t.kind != TokenKind::Identifier) {
        throw ParseError(line_no, t.column, "expected a variable name, found " + detail::describe(t));
      }
      if (std::find(problem_.vars.begin(), problem_.vars.end(), t.text) != problem_.vars.end()) {
        throw ParseError(line_no, t.column, "duplicate variable '" + t.text + "'");
      }
      if (have_field_ && t.text == problem_.theta) {
        throw ParseError(line_no, t.column, "variable '" + t.text + "' clashes with the field variable");
      }
      problem_.vars.push_back(t.text);
    }
    if (problem_.vars.empty()) throw ParseError(line_no, tokens[1].column, "expected at least one variable");
    have_vars_ = true;
  }

  void mode(const std::vector<Token>& tokens, std::size_t line_no) {
    const Token& t = tokens[1];
    const auto m = t.kind == TokenKind::Identifier ? parse_mode(t.text) : std::nullopt;
    if (!m) throw ParseError(line_no, t.column, "expected sum, trace or signed, found " + detail::describe(t));
    if (tokens[2].kind != TokenKind::End) {
      throw ParseError(line_no, tokens[2].column, "unexpected " + detail::describe(tokens[2]));
    }
    problem_.mode = *m;
  }

  void require_header(const Token& at, std::size_t line_no) const {
    if (!have_field_ || !have_vars_) {
      throw ParseError(line_no, at.column, "'field' and 'vars' must be declared first");
    }
  }

  void term(const std::vector<Token>& tokens, std::size_t line_no) {
    require_header(tokens[0], line_no);
    auto names = problem_.vars;
    names.push_back(problem_.theta);
    ExpressionParser parser(tokens, 1, names, line_no);
    const Token& weight_token = parser.peek();
    const Rat weight = parser.parse_signed_rational();
    if (weight.sign() <= 0) {
      throw ParseError(line_no, weight_token.column, "term weight must be positive, got " + weight.str());
    }
    parser.expect(TokenKind::Colon, "':'");
    const RatPoly p = parser.parse_to_end();
    if (p.is_zero()) {
      problem_.warnings.push_back("line " + std::to_string(line_no) + ": zero term skipped");
      return;
    }
    problem_.inputs.push_back({weight, theta_expand(p, problem_.u)});
  }

  void target(const std::vector<Token>& tokens, std::size_t line_no) {
    require_header(tokens[0], line_no);
    if (problem_.declared_f) throw ParseError(line_no, tokens[0].column, "duplicate 'target' declaration");
    ExpressionParser parser(tokens, 1, problem_.vars, line_no);
    parser.expect(TokenKind::Colon, "':'");
    problem_.declared_f = parser.parse_to_end();
  }

  Problem problem_;
  bool have_field_ = false;
  bool have_vars_ = false;
};

}  // namespace

Problem parse_problem(std::string_view text) { return ProblemReader{}.read(text); }

}  // namespace ratsos
