#include "idealforge/ideal.hpp"

#include "idealforge/errors.hpp"

namespace idealforge {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <class T>
const T& expect(const IdealArgument& s, const char* what) {
  if (const auto* p = std::get_if<T>(&s)) return *p;
  throw PreconditionError(std::string("this ideal lives on ") + what);
}

IdealPtr wrap(IdealDescriptor d) { return std::make_shared<const IdealDescriptor>(std::move(d)); }

bool argument_subset(const IdealArgument& a, const IdealArgument& b) {
  return std::visit(Overloaded{
                        [&](const SymbolicSet& s) { return subset(s, expect<SymbolicSet>(b, "omega^n")); },
                        [&](const SumSymbolicSet& s) { return sum_subset(s, expect<SumSymbolicSet>(b, "the sum space")); },
                        [&](const CertifiedSet& s) { return certified_subset(s, expect<CertifiedSet>(b, "omega")); },
                    },
                    a);
}

}  // namespace

IdealPtr fin_pow(std::size_t n) {
  if (n == 0) throw LevelError("Fin^n needs n >= 1");
  return wrap({FinPowIdeal{n}});
}
IdealPtr fin_omega_limit() { return wrap({FinOmegaLimitIdeal{}}); }
IdealPtr fin_omega_katetov() { return wrap({FinOmegaKatetovIdeal{}}); }
IdealPtr fin_prime(Family f) { return wrap({FinPrimeIdeal{f}}); }

IdealPtr fubini_sum(IdealPtr index, std::map<std::size_t, IdealPtr> summands) {
  return wrap({FubiniSumIdeal{std::move(index), std::move(summands)}});
}

IdealPtr restriction(IdealPtr base, IdealArgument carrier) {
  if (ideal_member(*base, carrier)) throw PreconditionError("restriction carrier already belongs to the base ideal");
  return wrap({RestrictionIdeal{std::move(base), std::move(carrier)}});
}

IdealPtr generated_by(Family f, std::vector<CertifiedSet> generators) {
  for (const auto& g : generators) {
    if (g.family != f) throw PreconditionError("generator over a different partition family");
  }
  return wrap({GeneratedIdeal{f, std::move(generators)}});
}

bool fubini_member(const FubiniSumIdeal& desc, const SumSymbolicSet& m) {
  const auto* index = desc.index ? std::get_if<FinPowIdeal>(&desc.index->node) : nullptr;
  if (index == nullptr || index->n != 1) throw PreconditionError("Fubini sums are supported over the index ideal Fin");
  for (const auto& [j, d] : desc.summands) {
    const auto* p = d ? std::get_if<FinPowIdeal>(&d->node) : nullptr;
    if (p == nullptr || p->n != j) throw PreconditionError("summand " + std::to_string(j) + " must carry Fin^j");
  }
  // Fin ignores the finitely many exceptional summands.
  return finpow_omega_member(m);
}

bool ideal_member(const IdealDescriptor& ideal, const IdealArgument& set) {
  return std::visit(
      Overloaded{
          [&](const FinPowIdeal& d) {
            const auto& s = expect<SymbolicSet>(set, "omega^n");
            if (s.level() != d.n) throw LevelError("Fin^" + std::to_string(d.n) + " needs a level-" + std::to_string(d.n) + " set");
            return fin_member(s, d.n);
          },
          [&](const FinOmegaLimitIdeal&) {
            return finomega_member(expect<SumSymbolicSet>(set, "the sum space")).has_value();
          },
          [&](const FinOmegaKatetovIdeal&) { return finpow_omega_member(expect<SumSymbolicSet>(set, "the sum space")); },
          [&](const FinPrimeIdeal& d) {
            const auto& a = expect<CertifiedSet>(set, "omega");
            if (a.family != d.family) throw PreconditionError("certified set over a different partition family");
            return finprime_member(a).has_value();
          },
          [&](const FubiniSumIdeal& d) { return fubini_member(d, expect<SumSymbolicSet>(set, "the sum space")); },
          [&](const RestrictionIdeal& d) { return argument_subset(set, d.carrier) && ideal_member(*d.base, set); },
          [&](const GeneratedIdeal& d) {
            const auto& a = expect<CertifiedSet>(set, "omega");
            CertifiedSet cover = CertifiedSet::finite(d.family, {});
            for (const auto& g : d.generators) cover = certified_union(cover, g);
            return certified_almost_subset(a, cover);
          },
      },
      ideal.node);
}

std::string describe(const IdealDescriptor& ideal) {
  return std::visit(Overloaded{
                        [](const FinPowIdeal& d) { return "fin^" + std::to_string(d.n); },
                        [](const FinOmegaLimitIdeal&) { return std::string("finomega"); },
                        [](const FinOmegaKatetovIdeal&) { return std::string("finpow-omega"); },
                        [](const FinPrimeIdeal& d) { return "finprime:" + family_name(d.family); },
                        [](const FubiniSumIdeal& d) { return "fubini(" + (d.index ? describe(*d.index) : "?") + ")"; },
                        [](const RestrictionIdeal& d) { return "restrict(" + describe(*d.base) + ")"; },
                        [](const GeneratedIdeal& d) {
                          return "generated:" + family_name(d.family) + "[" + std::to_string(d.generators.size()) + "]";
                        },
                    },
                    ideal.node);
}

}  // namespace idealforge
