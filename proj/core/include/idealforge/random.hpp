#pragma once

// Seeded, splittable randomness and random generators for the symbolic classes.

#include <cstdint>
#include <random>

#include "idealforge/finprime.hpp"
#include "idealforge/sumspace.hpp"

namespace idealforge {

/// mt19937_64 seeded through splitmix64. Child streams are derived from the
/// seed and a stream id, so sub-tasks stay reproducible in any order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0);

  [[nodiscard]] Rng split(std::uint64_t stream) const;
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive. Implemented here rather than with
  /// std::uniform_int_distribution so sequences agree across standard libraries.
  std::uint64_t below(std::uint64_t n);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  [[nodiscard]] std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

struct SetShape {
  std::size_t max_conjuncts = 3;
  Nat value_bound = 6;       // predicate values drawn from [0, value_bound)
  std::size_t max_values = 3;
};

FiniteSet random_finite_set(Rng& rng, const SetShape& shape);
Predicate random_predicate(Rng& rng, const SetShape& shape);
SymbolicSet random_symbolic_set(Rng& rng, std::size_t level, const SetShape& shape = {});
/// Random member of Fin^level: every conjunct pins some coordinate with In.
SymbolicSet random_small_set(Rng& rng, std::size_t level, const SetShape& shape = {});
/// Template sum set with head/tail widths <= 2 and a few exceptional summands.
SumSymbolicSet random_sum_set(Rng& rng, const SetShape& shape = {});
/// Random member of Fin_omega: a random set kept off some P-bar.
SumSymbolicSet random_finomega_member(Rng& rng, const SetShape& shape = {});
/// Finite part, up to two bundles and one multicell, levels <= max_level.
CertifiedSet random_certified_set(Rng& rng, Family f, std::size_t max_level, const SetShape& shape = {});

}  // namespace idealforge
