#pragma once

// Descriptors for the ideals the library decides, and one membership entry point.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "idealforge/finprime.hpp"
#include "idealforge/sumspace.hpp"

namespace idealforge {

struct IdealDescriptor;
using IdealPtr = std::shared_ptr<const IdealDescriptor>;

/// Fin^n on omega^n.
struct FinPowIdeal {
  std::size_t n = 1;
};
/// Inductive limit of the Fin^n along last-coordinate projections.
struct FinOmegaLimitIdeal {};
/// Katetov's Fin^omega on the sum space.
struct FinOmegaKatetovIdeal {};
struct FinPrimeIdeal {
  Family family = Family::A;
};
/// Index-ideal Fubini sum on the sum space; summand j defaults to Fin^j.
struct FubiniSumIdeal {
  IdealPtr index;
  std::map<std::size_t, IdealPtr> summands;
};
using IdealArgument = std::variant<SymbolicSet, SumSymbolicSet, CertifiedSet>;
/// {A subset of carrier : A in base}.
struct RestrictionIdeal {
  IdealPtr base;
  IdealArgument carrier;
};
/// Ideal on omega generated by finitely many certified sets (and Fin).
struct GeneratedIdeal {
  Family family = Family::A;
  std::vector<CertifiedSet> generators;
};

struct IdealDescriptor {
  std::variant<FinPowIdeal, FinOmegaLimitIdeal, FinOmegaKatetovIdeal, FinPrimeIdeal, FubiniSumIdeal,
               RestrictionIdeal, GeneratedIdeal>
      node;
};

IdealPtr fin_pow(std::size_t n);
IdealPtr fin_omega_limit();
IdealPtr fin_omega_katetov();
IdealPtr fin_prime(Family f);
IdealPtr fubini_sum(IdealPtr index, std::map<std::size_t, IdealPtr> summands = {});
/// Throws PreconditionError when the carrier already belongs to the base ideal.
IdealPtr restriction(IdealPtr base, IdealArgument carrier);
IdealPtr generated_by(Family f, std::vector<CertifiedSet> generators);

/// Exact membership; throws PreconditionError on a set of the wrong kind.
bool ideal_member(const IdealDescriptor& ideal, const IdealArgument& set);

/// Index ideal must be Fin and summand j's ideal Fin^j.
bool fubini_member(const FubiniSumIdeal& desc, const SumSymbolicSet& m);

std::string describe(const IdealDescriptor& ideal);

}  // namespace idealforge
