#pragma once

// Text syntax for symbolic sets (.setx), sum sets (.sumx) and certified sets (.cfx).
//
//   level 2: (x0 in {1,2} & x1 notin {3}) | x0 in {5}
//
//   sum:
//     summand 1 = x0 in {0}
//     tail(head=level 1: x0 notin {0}; last=level 1: all; from=2)
//
//   certified family A:
//     finite {1, 2, 3}
//     bundle 0: x0 in {5}
//     cell 0=(1) 2=(1,2,3)
//
// `all` and `none` denote the full and empty set; `#` starts a comment.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "idealforge/ideal.hpp"

namespace idealforge::cli {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// The header selects the kind of set.
IdealArgument parse(std::string_view text);
SymbolicSet parse_symbolic(std::string_view text);
SumSymbolicSet parse_sum(std::string_view text);
CertifiedSet parse_certified(std::string_view text);

/// Canonical prints; parse(print(x)) reproduces x.
std::string print(const SymbolicSet& s);
std::string print(const SumSymbolicSet& m);
std::string print(const CertifiedSet& a);
std::string print(const IdealArgument& x);
/// The expression without its "level N:" header.
std::string print_expression(const SymbolicSet& s);

}  // namespace idealforge::cli
