#include "dzid/expr_parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace dzid {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void fail(std::string_view text, std::size_t offset, const std::string& what) {
  auto [line, column] = line_column(text, offset);
  throw ParseError(what, offset, line, column);
}

/// Recursive descent over text[begin, end); offsets reported against the whole text.
class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t begin, std::size_t end, int dim)
      : text_(text), pos_(begin), end_(end), dim_(dim) {}

  DiffPoly parse() {
    DiffPoly value = expr();
    skip_space();
    if (pos_ < end_) fail(text_, pos_, std::string("unexpected '") + text_[pos_] + "'");
    return value;
  }

 private:
  void skip_space() {
    while (pos_ < end_ && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < end_ && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  DiffPoly expr() {
    DiffPoly value = term();
    for (;;) {
      if (accept('+'))
        value += term();
      else if (accept('-'))
        value -= term();
      else
        return value;
    }
  }

  DiffPoly term() {
    DiffPoly value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        DiffPoly divisor = unary();
        if (!divisor.is_constant()) fail(text_, at, "division by a non-constant expression");
        if (divisor.is_zero()) fail(text_, at, "division by zero");
        value *= divisor.constant_term().inverse();
      } else {
        return value;
      }
    }
  }

  DiffPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  DiffPoly power() {
    DiffPoly base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      auto e = integer();
      if (!e) fail(text_, at, "expected a nonnegative integer exponent");
      return base.pow(static_cast<unsigned>(*e));
    }
    return base;
  }

  std::optional<long> integer() {
    const std::size_t start = pos_;
    while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) return std::nullopt;
    if (pos_ - start > 9) fail(text_, start, "integer literal too long");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  DiffPoly primary() {
    skip_space();
    if (pos_ >= end_) fail(text_, pos_, "unexpected end of expression");
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      DiffPoly inner = expr();
      if (!accept(')')) fail(text_, pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return DiffPoly(Rational(BigInt(std::string(text_.substr(start, pos_ - start)))));
    }
    if (c == 'v') {
      ++pos_;
      auto index = integer();
      if (!index) fail(text_, pos_, "expected variable index after 'v'");
      if (*index < 1 || *index > dim_)
        fail(text_, at, "variable v" + std::to_string(*index) + " outside 1.." + std::to_string(dim_));
      return DiffPoly::var(static_cast<int>(*index), 0);
    }
    fail(text_, at, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_, end_;
  int dim_;
};

struct Statement {
  std::string name;
  std::size_t name_at = 0, value_begin = 0, value_end = 0;
};

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t offset, std::size_t line, std::size_t column)
    : std::runtime_error("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      offset_(offset),
      line_(line),
      column_(column) {}

DiffPoly parse_polynomial(std::string_view text, int dim) { return ExprParser(text, 0, text.size(), dim).parse(); }

Potential parse_potential_text(std::string_view text) {
  std::vector<Statement> statements;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) || c == ';') {
      ++i;
      continue;
    }
    Statement s;
    s.name_at = i;
    while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) s.name += text[i++];
    if (s.name.empty()) fail(text, i, std::string("unexpected '") + c + "'");
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i >= text.size() || text[i] != '=') fail(text, i, "expected '=' after '" + s.name + "'");
    s.value_begin = ++i;
    while (i < text.size() && text[i] != '\n' && text[i] != ';' && text[i] != '#') ++i;
    s.value_end = i;
    statements.push_back(s);
  }

  const Statement* n_stmt = nullptr;
  const Statement* f_stmt = nullptr;
  for (const auto& s : statements) {
    const Statement** slot = s.name == "N" ? &n_stmt : (s.name == "F" ? &f_stmt : nullptr);
    if (slot == nullptr) fail(text, s.name_at, "unknown statement '" + s.name + "'");
    if (*slot != nullptr) fail(text, s.name_at, "duplicate statement '" + s.name + "'");
    *slot = &s;
  }
  if (n_stmt == nullptr) fail(text, text.size(), "missing 'N = <dimension>'");
  if (f_stmt == nullptr) fail(text, text.size(), "missing 'F = <potential>'");

  Potential out;
  {
    std::size_t b = n_stmt->value_begin, e = n_stmt->value_end;
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::size_t k = b;
    while (k < e && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
    if (k == b || k != e || e - b > 4) fail(text, b, "N must be a positive integer");
    out.dim = std::stoi(std::string(text.substr(b, e - b)));
    if (out.dim < 1) fail(text, b, "N must be a positive integer");
  }
  out.F = ExprParser(text, f_stmt->value_begin, f_stmt->value_end, out.dim).parse();
  return out;
}

}  // namespace dzid
