#include <gtest/gtest.h>

#include "idealforge/errors.hpp"
#include "idealforge/ideal.hpp"
#include "idealforge/quasisys.hpp"
#include "idealforge/random.hpp"
#include "support.hpp"

namespace idealforge {
namespace {

using test::f_set;
using test::set;
using test::sum;

TEST(BuiltinSystem, Domains) {
  const QuasiHomSystem standard = builtin_system("standard");
  const QuasiHomSystem ex = builtin_system("exindlim");
  EXPECT_TRUE(map_domain(standard, 1, 3).is_full());
  EXPECT_EQ(map_domain(ex, 1, 3), f_set(3));
  EXPECT_TRUE(map_domain(ex, 2, 3).is_full());
  EXPECT_THROW((void)builtin_system("other"), PreconditionError);
}

TEST(Coherence, BuiltinSystemsPass) {
  EXPECT_TRUE(check_coherent(builtin_system("standard")).pass);
  EXPECT_TRUE(check_coherent(builtin_system("exindlim")).pass);
}

TEST(Coherence, FirstCoordinateProjectionIsCaught) {
  QuasiHomSystem sys = builtin_system("standard");
  sys.overrides.insert_or_assign({1, 3}, MapExpr::first_proj(3, 1));
  const CoherenceResult r = check_coherent(sys);
  ASSERT_FALSE(r.pass);
  ASSERT_TRUE(r.violation.has_value());
  const CoherenceViolation& v = *r.violation;
  EXPECT_EQ(v.k, 3u);
  EXPECT_NE(v.direct, v.composed);
  EXPECT_EQ(v.direct, (Point{v.a.front()}));
}

TEST(Coherence, TabulatedMapsAreCheckedPointwise) {
  QuasiHomSystem sys = builtin_system("standard");
  sys.overrides.insert_or_assign({1, 2}, MapExpr::tabulated(2, 1, {{{0, 0}, {0}}, {{0, 1}, {1}}, {{0, 2}, {2}}}));
  EXPECT_TRUE(check_coherent(sys).pass);
  sys.overrides.insert_or_assign({1, 2}, MapExpr::tabulated(2, 1, {{{0, 0}, {1}}, {{0, 1}, {0}}}));
  EXPECT_FALSE(check_coherent(sys).pass);
}

TEST(ConditionC, Examples) {
  EXPECT_TRUE(check_condition_C(builtin_system("standard")).pass);

  const ConditionCResult ex = check_condition_C(builtin_system("exindlim"));
  ASSERT_FALSE(ex.pass);
  ASSERT_TRUE(ex.violation.has_value());
  EXPECT_EQ(ex.violation->i, 1u);
  EXPECT_EQ(ex.violation->j, 2u);
  EXPECT_EQ(ex.violation->k, 3u);
  EXPECT_EQ(ex.violation->witness, (Point{0, 1, 0}));

  EXPECT_TRUE(check_condition_C(extend_infinity(builtin_system("standard"))).pass);
  EXPECT_THROW((void)extend_infinity(builtin_system("exindlim")), PreconditionError);
}

TEST(ConditionC, RestrictedVariantsKeepItUnderExtension) {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    Rng r = rng.split(trial);
    QuasiHomSystem sys = builtin_system("standard");
    const std::size_t i = 1 + r.below(3);
    sys.domains.insert_or_assign(i, SumSymbolicSet::overline(complement(random_small_set(r, i))));
    ASSERT_TRUE(check_condition_C(sys).pass) << trial;
    EXPECT_TRUE(check_condition_C(extend_infinity(sys)).pass) << trial;
  }
}

TEST(ExtendInfinity, TopIdealAndMaps) {
  const QuasiHomSystem ext = extend_infinity(builtin_system("standard"));
  EXPECT_FALSE(top_member(ext, SumSymbolicSet::full()));
  EXPECT_TRUE(top_member(ext, sum("sum: summand 2 = all\n summand 4 = all")));
  const SetValue pre = map_preimage(limit_map(ext, 1), set("level 1: x0 in {5}"));
  EXPECT_TRUE(sum_same_set(std::get<SumSymbolicSet>(pre), SumSymbolicSet::overline(set("level 1: x0 in {5}"))));
}

TEST(FubiniMember, Examples) {
  const IdealPtr sum_ideal = fubini_sum(fin_pow(1));
  const auto& desc = std::get<FubiniSumIdeal>(sum_ideal->node);
  EXPECT_TRUE(fubini_member(desc, sum("sum: tail(head=level 1: x0 in {3}; last=level 0: all; from=1)")));
  EXPECT_FALSE(fubini_member(desc, SumSymbolicSet::full()));
  EXPECT_TRUE(fubini_member(desc, sum("sum: summand 2 = all\n summand 4 = all")));
  EXPECT_THROW((void)fubini_member(FubiniSumIdeal{fin_pow(2), {}}, SumSymbolicSet::full()), PreconditionError);
}

TEST(LimitMember, ExampleSystem) {
  const QuasiHomSystem ex = builtin_system("exindlim");
  const SumSymbolicSet ac = sum_complement(exindlim_a());
  const SumSymbolicSet bc = sum_complement(exindlim_b());

  const auto ca = limit_member(ex, ac);
  ASSERT_TRUE(ca.has_value());
  EXPECT_EQ(ca->index, 1u);
  EXPECT_TRUE(ca->filter_set.is_full());
  EXPECT_TRUE(validate_limit_certificate(ex, ac, *ca));

  const auto cb = limit_member(ex, bc);
  ASSERT_TRUE(cb.has_value());
  EXPECT_EQ(cb->index, 2u);
  EXPECT_TRUE(cb->filter_set.is_full());

  EXPECT_FALSE(limit_member(ex, sum_unite(ac, bc)).has_value());
}

TEST(LimitMember, StandardSystemIsAnIdealAndCertificatesLift) {
  const QuasiHomSystem sys = builtin_system("standard");
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Rng r = rng.split(trial);
    const SumSymbolicSet a = random_finomega_member(r);
    const SumSymbolicSet b = random_finomega_member(r);
    const auto ca = limit_member(sys, a);
    ASSERT_TRUE(ca.has_value());
    EXPECT_TRUE(validate_limit_certificate(sys, a, lift_limit_certificate(sys, *ca)));
    EXPECT_TRUE(limit_member(sys, sum_unite(a, b)).has_value());
    EXPECT_TRUE(limit_member(sys, sum_difference(a, random_sum_set(r))).has_value());
  }
}

TEST(Refuter, Examples) {
  EXPECT_EQ(exindlim_refuter(2, f_set(2)), (SumPoint{3, {0, 1, 0}}));
  EXPECT_EQ(exindlim_refuter(1, f_set(1)), (SumPoint{1, {1}}));
  EXPECT_EQ(exindlim_refuter(1, SymbolicSet::full(1)), (SumPoint{1, {0}}));
  EXPECT_THROW((void)exindlim_refuter(2, set("level 2: x0 in {0}")), PreconditionError);
}

TEST(Refuter, DefeatsSampledCandidates) {
  const QuasiHomSystem ex = builtin_system("exindlim");
  const SumSymbolicSet target = sum_unite(sum_complement(exindlim_a()), sum_complement(exindlim_b()));
  Rng rng(7);
  for (std::size_t i = 1; i <= 4; ++i) {
    for (int s = 0; s < 20; ++s) {
      Rng r = rng.split(i).split(s);
      const SymbolicSet p = complement(random_small_set(r, i));
      const SumPoint x = exindlim_refuter(i, p);
      EXPECT_TRUE(sum_contains(target, x));
      EXPECT_TRUE(sum_contains(SumSymbolicSet::overline(p), x));
      EXPECT_FALSE(validate_limit_certificate(ex, target, {i, p}));
    }
  }
}

}  // namespace
}  // namespace idealforge
