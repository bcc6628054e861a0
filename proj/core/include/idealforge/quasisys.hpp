#pragma once

// Systems of quasi-homomorphisms between the Fubini powers Fin^i, their
// inductive limits, and the checks that decide whether a limit is an ideal.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idealforge/mapexpr.hpp"
#include "idealforge/sumspace.hpp"

namespace idealforge {

/// Connecting maps pi_{i,j} : dom(pi_{i,j}) -> omega^i for 1 <= i <= j.
///
/// domains[i] is the sum set whose summand j is dom(pi_{i,j}); an absent entry
/// means every domain out of level i is full. Unlisted maps are projections
/// onto the last i coordinates.
struct QuasiHomSystem {
  std::string name;
  std::map<std::size_t, SumSymbolicSet> domains;
  std::map<std::pair<std::size_t, std::size_t>, MapExpr> overrides;
  /// Extended by the top index with the Fin-Fubini sum and pi_{i,inf} = Sum_j pi_{i,j}.
  bool has_top = false;
  /// Indices shown by finite presentations.
  std::size_t horizon = 6;
};

/// "standard" (full-domain last projections) or "exindlim" (the domains F_j
/// out of level 1); anything else throws PreconditionError.
QuasiHomSystem builtin_system(const std::string& name);

SymbolicSet map_domain(const QuasiHomSystem& sys, std::size_t i, std::size_t j);
MapExpr connecting_map(const QuasiHomSystem& sys, std::size_t i, std::size_t j);
/// Sum_{j>=i} pi_{i,j} restricted to Sum_{j>=i} dom(pi_{i,j}).
MapExpr limit_map(const QuasiHomSystem& sys, std::size_t i);
/// Largest index at which the system differs from the standard one.
std::size_t system_extent(const QuasiHomSystem& sys);

struct CoherenceViolation {
  std::size_t i = 0, j = 0, k = 0;
  Point a;
  Point direct;    // pi_{i,k}(a)
  Point composed;  // pi_{i,j}(pi_{j,k}(a))
};
struct CoherenceResult {
  bool pass = true;
  std::optional<CoherenceViolation> violation;
};

/// Selection maps are compared algebraically; tabulated maps pointwise on
/// their first `prefix` table entries.
CoherenceResult check_coherent(const QuasiHomSystem& sys, std::size_t prefix = 10000);

struct ConditionCViolation {
  std::size_t i = 0, j = 0;
  /// Summand of the witness; the top index never yields a new violation.
  std::size_t k = 0;
  Point witness;
};
struct ConditionCResult {
  bool pass = true;
  std::optional<ConditionCViolation> violation;
};

/// pi_{j,k}^{-1}[dom pi_{i,j}] within dom pi_{j,k} must lie in dom pi_{i,k}.
/// For fixed (i, j) all k >= j are covered at once by one sum-set inclusion.
ConditionCResult check_condition_C(const QuasiHomSystem& sys);

/// Throws PreconditionError unless the system satisfies condition (C).
QuasiHomSystem extend_infinity(const QuasiHomSystem& sys);

/// Top-index ideal of an extended system: the Fin-Fubini sum of the Fin^j.
bool top_member(const QuasiHomSystem& sys, const SumSymbolicSet& m);

/// Least i <= the search bound with a certificate (i, P), P in (Fin^i)*.
std::optional<LimitCertificate> limit_member(const QuasiHomSystem& sys, const SumSymbolicSet& m);
std::size_t limit_search_bound(const QuasiHomSystem& sys, const SumSymbolicSet& m);

/// Recomputes P-bar from the preimages and checks disjointness directly.
bool validate_limit_certificate(const QuasiHomSystem& sys, const SumSymbolicSet& m, const LimitCertificate& cert);

/// (i, P) -> (i + 1, pi_{i,i+1}^{-1}[P]) with the preimage confined to the domain.
LimitCertificate lift_limit_certificate(const QuasiHomSystem& sys, const LimitCertificate& cert);

/// A = Sum_{j>=1} pi_{1,j}^{-1}[omega] and B = Sum_{j>=2} pi_{2,j}^{-1}[omega^2] in the exindlim system.
SumSymbolicSet exindlim_a();
SumSymbolicSet exindlim_b();

/// A point of (A^c u B^c) inside P-bar, showing (i, P) is no certificate for
/// A^c u B^c. Requires complement(P) in Fin^i.
SumPoint exindlim_refuter(std::size_t i, const SymbolicSet& p);

}  // namespace idealforge
