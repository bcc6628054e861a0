#pragma once

#include <string_view>

#include "idealforge/cli/syntax.hpp"

namespace idealforge::test {

inline SymbolicSet set(std::string_view text) { return cli::parse_symbolic(text); }
inline SumSymbolicSet sum(std::string_view text) { return cli::parse_sum(text); }
inline CertifiedSet cert(std::string_view text) { return cli::parse_certified(text); }

/// F_i: points of omega^i whose first coordinate is not 0.
inline SymbolicSet f_set(std::size_t i) {
  return SymbolicSet::atom(i, 0, Predicate::not_in({0}));
}

}  // namespace idealforge::test
