#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dzid/diffpoly.hpp"

namespace dzid {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line, std::size_t column);
  [[nodiscard]] std::size_t offset() const { return offset_; }
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t offset_, line_, column_;
};

/// A Frobenius potential as read from text: "N = <int>" and "F = <expr>"
/// statements separated by newlines or ';', '#' starting a comment.
/// v1..vN become the jets v^{alpha,0}.
struct Potential {
  int dim = 0;
  DiffPoly F;
};

Potential parse_potential_text(std::string_view text);

/// Parses a polynomial expression in v1..v<dim>. Division is accepted only by
/// a nonzero constant.
DiffPoly parse_polynomial(std::string_view text, int dim);

}  // namespace dzid
