// Concrete ASCII syntax.
//
//   formula := iff
//   iff     := imp ("<->" imp)*            left-associative
//   imp     := or ("->" imp)?              right-associative
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "~" unary | modal unary | "V" unary | "C" unary
//            | "(" formula ")" | atom | "true" | "false"
//   modal   := ("L" | "N" | "O") digits
//   atom    := lowercase identifier
//
// "O_i a" expands to L_i a & N_i ~a and "C a" to ~V ~a. The printer folds
// both patterns back, so parse(print(f)) == f for every AST.

#ifndef ONLYKNOW_SYNTAX_HPP
#define ONLYKNOW_SYNTAX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "onlyknow/formula.hpp"

namespace onlyknow {

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses `text`. When `agents` is given, every modal index must lie in
/// 1..*agents; otherwise any positive index is accepted.
Formula parse(std::string_view text, std::optional<int> agents = std::nullopt);

std::string print(const Formula& f);

}  // namespace onlyknow

#endif  // ONLYKNOW_SYNTAX_HPP
