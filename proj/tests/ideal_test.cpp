#include <gtest/gtest.h>

#include "idealforge/errors.hpp"
#include "idealforge/ideal.hpp"
#include "support.hpp"

namespace idealforge {
namespace {

using test::f_set;
using test::set;
using test::sum;

TEST(Ideal, FinPowDispatch) {
  EXPECT_TRUE(ideal_member(*fin_pow(2), set("level 2: x0 in {0}")));
  EXPECT_FALSE(ideal_member(*fin_pow(2), f_set(2)));
  EXPECT_THROW((void)ideal_member(*fin_pow(3), f_set(2)), LevelError);
  EXPECT_THROW((void)ideal_member(*fin_pow(2), SumSymbolicSet::full()), PreconditionError);
  EXPECT_THROW((void)fin_pow(0), LevelError);
}

TEST(Ideal, SumSpaceIdeals) {
  const SumSymbolicSet diag = sum("sum: summand 2 = all\n tail(head=level 0: all; last=level 1: x0 in {0}; from=3)");
  EXPECT_TRUE(ideal_member(*fin_omega_limit(), diag));
  EXPECT_TRUE(ideal_member(*fin_omega_katetov(), diag));
  EXPECT_TRUE(ideal_member(*fubini_sum(fin_pow(1)), diag));
  EXPECT_FALSE(ideal_member(*fin_omega_limit(), SumSymbolicSet::full()));
}

TEST(Ideal, FinPrimeAndGenerated) {
  const CertifiedSet cell = CertifiedSet::bundle(Family::A, 0, set("level 1: x0 in {5}"));
  EXPECT_TRUE(ideal_member(*fin_prime(Family::A), cell));
  EXPECT_THROW((void)ideal_member(*fin_prime(Family::B), cell), PreconditionError);

  const IdealPtr gen = generated_by(Family::A, {cell});
  EXPECT_TRUE(ideal_member(*gen, certified_union(cell, CertifiedSet::finite(Family::A, {1, 2}))));
  EXPECT_FALSE(ideal_member(*gen, CertifiedSet::bundle(Family::A, 0, set("level 1: x0 in {6}"))));
}

TEST(Ideal, Restriction) {
  const IdealPtr r = restriction(fin_pow(2), IdealArgument{f_set(2)});
  EXPECT_TRUE(ideal_member(*r, set("level 2: x0 in {3}")));
  EXPECT_FALSE(ideal_member(*r, set("level 2: x0 in {0}")));
  EXPECT_THROW((void)restriction(fin_pow(2), IdealArgument{set("level 2: x0 in {0}")}), PreconditionError);
}

TEST(Ideal, Describe) {
  EXPECT_EQ(describe(*fin_pow(3)), "fin^3");
  EXPECT_EQ(describe(*fin_omega_limit()), "finomega");
  EXPECT_EQ(describe(*fin_prime(Family::B)), "finprime:B");
}

}  // namespace
}  // namespace idealforge
