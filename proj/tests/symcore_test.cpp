#include <gtest/gtest.h>

#include "idealforge/errors.hpp"
#include "idealforge/oracles/brute.hpp"
#include "idealforge/random.hpp"
#include "idealforge/symcore.hpp"
#include "support.hpp"

namespace idealforge {
namespace {

using test::f_set;
using test::set;

TEST(Contains, PointMembership) {
  EXPECT_TRUE(contains(set("level 2: x0 in {0}"), {0, 7}));
  EXPECT_FALSE(contains(set("level 2: x0 in {0}"), {1, 7}));
  EXPECT_FALSE(contains(f_set(2), {0, 3}));
  EXPECT_THROW((void)contains(f_set(2), {0}), ArityError);
}

TEST(Combine, BooleanExamples) {
  EXPECT_TRUE(intersect(set("level 1: x0 in {1}"), set("level 1: x0 notin {1}")).is_empty());
  EXPECT_EQ(complement(f_set(2)), set("level 2: x0 in {0}"));
  EXPECT_EQ(unite(set("level 1: x0 in {1,2}"), set("level 1: x0 in {2,3}")), set("level 1: x0 in {1,2,3}"));
  EXPECT_THROW((void)unite(f_set(2), f_set(3)), LevelError);
}

TEST(Combine, CanonicalFormHasOnePredicatePerCoordinate) {
  const SymbolicSet s = intersect(set("level 2: x0 in {1,2,3} & x1 notin {4}"), set("level 2: x0 notin {2} & x1 notin {5}"));
  ASSERT_EQ(s.conjuncts().size(), 1u);
  EXPECT_EQ(s.conjuncts()[0].at(0), Predicate::in({1, 3}));
  EXPECT_EQ(s.conjuncts()[0].at(1), Predicate::not_in({4, 5}));
}

TEST(Subset, Examples) {
  EXPECT_TRUE(is_empty(intersect(set("level 1: x0 in {1}"), set("level 1: x0 notin {1}"))));
  EXPECT_TRUE(subset(set("level 2: x0 in {1} & x1 in {2}"), set("level 2: x0 in {1,3}")));
  EXPECT_FALSE(subset(SymbolicSet::full(2), f_set(2)));
}

TEST(Sections, GenericSection) {
  GenericSection g = generic_section_first(set("level 2: x0 in {0,1} & x1 notin {2}"));
  EXPECT_TRUE(g.section.is_empty());
  EXPECT_EQ(g.exceptional, (FiniteSet{0, 1}));

  g = generic_section_first(set("level 2: x1 in {7}"));
  EXPECT_EQ(g.section, set("level 1: x0 in {7}"));
  EXPECT_TRUE(g.exceptional.empty());

  g = generic_section_first(SymbolicSet::full(2));
  EXPECT_TRUE(g.section.is_full());
  EXPECT_TRUE(g.exceptional.empty());
}

TEST(Sections, FixedValue) {
  const SymbolicSet s = set("level 2: x0 in {0,1} & x1 notin {2} | x1 in {9}");
  EXPECT_EQ(section_first(s, 1), set("level 1: x0 notin {2}"));
  EXPECT_EQ(section_first(s, 5), set("level 1: x0 in {9}"));
}

TEST(Projection, Examples) {
  EXPECT_TRUE(project_last(set("level 2: x0 in {0}"), 1).is_full());
  EXPECT_EQ(project_last(set("level 2: x1 in {5}"), 1), set("level 1: x0 in {5}"));
  EXPECT_EQ(lift_last(set("level 1: x0 in {0}"), 3), set("level 3: x2 in {0}"));
  EXPECT_EQ(project_first(set("level 3: x0 in {1} & x2 in {4}"), 1), set("level 1: x0 in {1}"));
  EXPECT_EQ(lift_first(set("level 1: x0 in {2}"), 3), set("level 3: x0 in {2}"));
}

TEST(Enumeration, Examples) {
  EXPECT_EQ(finite_witness(set("level 2: x0 in {1} & x1 in {2,3}")), (std::vector<Point>{{1, 2}, {1, 3}}));
  EXPECT_FALSE(finite_witness(set("level 1: x0 notin {1}")).has_value());
  EXPECT_EQ(enumerate(f_set(2), 2), (std::vector<Point>{{1, 0}, {1, 1}}));
  EXPECT_EQ(least_element(f_set(2)), (Point{1, 0}));
  EXPECT_FALSE(least_element(SymbolicSet::empty(2)).has_value());
}

TEST(FinMember, Examples) {
  EXPECT_TRUE(fin_member(set("level 1: x0 in {1,2,3}"), 1));
  EXPECT_TRUE(fin_member(set("level 2: x0 in {0}"), 2));
  EXPECT_FALSE(fin_member(f_set(2), 2));
  EXPECT_TRUE(fin_member(set("level 2: x0 in {0,1}"), 2));
  EXPECT_THROW((void)fin_member(f_set(2), 3), LevelError);
}

TEST(FinMember, ExampleInstancesUpToLevelFour) {
  for (std::size_t i = 1; i <= 4; ++i) {
    EXPECT_TRUE(fin_member(complement(f_set(i)), i)) << i;
    EXPECT_FALSE(fin_member(f_set(i), i)) << i;
  }
}

TEST(FinMember, EvidenceMatchesVerdict) {
  const FinEvidence yes = fin_evidence(set("level 2: x0 in {0} | x1 in {3}"));
  EXPECT_TRUE(yes.member);
  EXPECT_EQ(yes.finite_coordinate.size(), 2u);
  const FinEvidence no = fin_evidence(set("level 2: x0 in {0} | x1 notin {3}"));
  EXPECT_FALSE(no.member);
  EXPECT_EQ(no.cofinite_conjunct, std::optional<std::size_t>{1});
}

class SymcoreProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SymcoreProperty, IdealAxiomsAndDuality) {
  Rng rng = Rng(GetParam());
  for (int trial = 0; trial < 60; ++trial) {
    Rng r = rng.split(trial);
    const std::size_t n = 1 + r.below(3);
    const SymbolicSet s = r.chance(1, 2) ? random_small_set(r, n) : random_symbolic_set(r, n);
    const SymbolicSet t = r.chance(1, 2) ? random_small_set(r, n) : random_symbolic_set(r, n);
    if (fin_member(s, n) && fin_member(t, n)) EXPECT_TRUE(fin_member(unite(s, t), n));
    if (fin_member(unite(s, t), n)) EXPECT_TRUE(fin_member(intersect(s, t), n));
    EXPECT_FALSE(fin_member(s, n) && fin_member(complement(s), n));
    EXPECT_FALSE(fin_member(SymbolicSet::full(n), n));
    EXPECT_EQ(subset(s, t), is_empty(difference(s, t)));
  }
}

TEST_P(SymcoreProperty, ProjectionAdjunction) {
  Rng rng = Rng(GetParam()).split(7);
  for (int trial = 0; trial < 60; ++trial) {
    Rng r = rng.split(trial);
    const std::size_t n = 2 + r.below(2);
    const std::size_t i = 1 + r.below(n - 1);
    const SymbolicSet s = random_symbolic_set(r, n);
    const SymbolicSet t = random_symbolic_set(r, i);
    EXPECT_TRUE(subset(s, lift_last(project_last(s, i), n)));
    EXPECT_TRUE(same_set(project_last(lift_last(t, n), i), t));
  }
}

TEST_P(SymcoreProperty, AgreesWithGenericPointOracle) {
  Rng rng = Rng(GetParam()).split(11);
  for (int trial = 0; trial < 60; ++trial) {
    Rng r = rng.split(trial);
    const std::size_t n = 1 + r.below(4);
    const SymbolicSet s = random_symbolic_set(r, n);
    EXPECT_EQ(fin_member(s, n), oracle::fin_generic_point(s));
    if (n == 2) EXPECT_EQ(fin_member(s, n), oracle::fin2_sections(s));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SymcoreProperty, ::testing::Values(1u, 2u, 3u, 4u, 5u));

}  // namespace
}  // namespace idealforge
