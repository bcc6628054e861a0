#include <gtest/gtest.h>

#include "idealforge/errors.hpp"
#include "idealforge/finprime.hpp"
#include "idealforge/oracles/brute.hpp"
#include "idealforge/random.hpp"
#include "support.hpp"

namespace idealforge {
namespace {

using test::cert;
using test::f_set;
using test::set;

CertifiedSet bundle5() { return CertifiedSet::bundle(Family::A, 0, set("level 1: x0 in {5}")); }

TEST(CertifiedSet, PointwiseSemantics) {
  const std::vector<Nat> in5 = enumerate_intersection(Family::A, std::map<std::size_t, Point>{{0, {5}}}, 4);
  for (Nat m : in5) EXPECT_TRUE(certified_contains(bundle5(), m));
  EXPECT_FALSE(certified_contains(bundle5(), 0));

  const CertifiedSet mc = CertifiedSet::multicell(Family::A, {{0, {1}}, {1, {1, 2}}});
  for (Nat m = 0; m < 10000; ++m) ASSERT_EQ(certified_contains(mc, m), oracle::certified_member(mc, m));
}

TEST(CertifiedSet, UnionMergesBundlesPerLevel) {
  const CertifiedSet u = certified_union(bundle5(), CertifiedSet::bundle(Family::A, 0, set("level 1: x0 in {6}")));
  ASSERT_EQ(u.bundles.size(), 1u);
  EXPECT_EQ(u.bundles.at(0), set("level 1: x0 in {5,6}"));
  EXPECT_THROW((void)certified_union(bundle5(), CertifiedSet::finite(Family::B, {1})), PreconditionError);
}

TEST(CertifiedSet, ValidationRejectsBadShapes) {
  EXPECT_THROW(validate(CertifiedSet::bundle(Family::A, 1, set("level 1: x0 in {1}"))), LevelError);
  EXPECT_THROW(validate(CertifiedSet::multicell(Family::A, {{1, {1}}})), ArityError);
}

TEST(Phi, Examples) {
  const BlockFormula f = phi(bundle5(), 1);
  for (Nat a : {5u, 6u}) {
    for (Nat b : {0u, 3u}) {
      const std::vector<Point> s{{a}, {b, 1}};
      EXPECT_EQ(evaluate(f, s), a != 5);
      EXPECT_EQ(evaluate(f, s), oracle::meets_finitely(bundle5(), s));
    }
  }

  const BlockFormula t = phi(CertifiedSet::finite(Family::A, {1, 2, 3}), 2);
  EXPECT_TRUE(evaluate(t, {{0}, {0, 0}, {0, 0, 0}}));
  EXPECT_FALSE(t.max_level().has_value());

  const CertifiedSet mc = CertifiedSet::multicell(Family::A, {{0, {1}}, {2, {0, 0, 2}}});
  const BlockFormula g = phi(mc, 2);
  EXPECT_FALSE(evaluate(g, {{1}, {4, 4}, {0, 0, 2}}));
  EXPECT_TRUE(evaluate(g, {{1}, {4, 4}, {0, 0, 3}}));
  EXPECT_TRUE(evaluate(g, {{2}, {4, 4}, {0, 0, 2}}));
  EXPECT_THROW((void)phi(mc, 1), PreconditionError);
}

TEST(Upfamily, Examples) {
  auto r = upfamily_member(BlockFormula::negation(BlockFormula::atom(0, set("level 1: x0 in {5}"))), 0);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->at(0), set("level 1: x0 in {5}"));

  const SymbolicSet q = set("level 2: x1 in {3}");
  r = upfamily_member(BlockFormula::negation(BlockFormula::atom(1, q)), 1);
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(r->at(0).is_empty());
  EXPECT_EQ(r->at(1), q);

  EXPECT_FALSE(upfamily_member(BlockFormula::negation(BlockFormula::atom(1, f_set(2))), 1).has_value());

  r = upfamily_member(BlockFormula::constant(true), 2);
  ASSERT_TRUE(r.has_value());
  for (const SymbolicSet& b : *r) EXPECT_TRUE(b.is_empty());
}

TEST(Upfamily, WitnessesValidate) {
  const BlockFormula f = BlockFormula::disjunction(
      {BlockFormula::negation(BlockFormula::atom(0, set("level 1: x0 in {1,2}"))),
       BlockFormula::atom(1, set("level 2: x0 notin {4}"))});
  const auto r = upfamily_member(f, 1);
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(validate_rectangle(f, *r));
}

TEST(Jn, Examples) {
  EXPECT_TRUE(jn_member(bundle5(), 0));
  EXPECT_TRUE(jn_member(CertifiedSet::bundle(Family::A, 1, set("level 2: x0 in {3}")), 1));
  const CertifiedSet big = CertifiedSet::bundle(Family::A, 1, f_set(2));
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_FALSE(jn_member(big, n)) << n;
  EXPECT_FALSE(jn_member(CertifiedSet::bundle(Family::A, 1, set("level 2: x0 in {3}")), 0));
}

TEST(FinPrime, Examples) {
  const CertifiedSet a = certified_union(bundle5(), CertifiedSet::finite(Family::A, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}));
  const auto c = finprime_member(a);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->n, 0u);
  EXPECT_FALSE(finprime_member(CertifiedSet::bundle(Family::A, 0, SymbolicSet::full(1))).has_value());
  EXPECT_FALSE(finprime_member(CertifiedSet::bundle(Family::A, 1, f_set(2))).has_value());
  EXPECT_TRUE(finprime_member(CertifiedSet::multicell(Family::B, {{2, {1, 2, 3}}})).has_value());
}

TEST(FinPrime, ParsedCertifiedSet) {
  const CertifiedSet a = cert("certified family A:\n finite {1,2}\n bundle 1: x1 in {0}\n cell 0=(3) 2=(1,1,1)");
  EXPECT_EQ(a.max_level(), 2u);
  EXPECT_TRUE(finprime_member(a).has_value());
}

TEST(Decomposition, Examples) {
  Decomposition d = decomposition_certificate(bundle5());
  ASSERT_EQ(d.generators.size(), 1u);
  EXPECT_EQ(d.generators[0].cells, set("level 1: x0 in {5}"));
  EXPECT_TRUE(validate_decomposition(bundle5(), d));

  const CertifiedSet two = certified_union(bundle5(), CertifiedSet::bundle(Family::A, 1, set("level 2: x0 in {1}")));
  d = decomposition_certificate(two);
  EXPECT_EQ(d.generators.size(), 2u);
  EXPECT_TRUE(validate_decomposition(two, d));

  const CertifiedSet fin = CertifiedSet::finite(Family::A, {4, 8});
  d = decomposition_certificate(fin);
  EXPECT_TRUE(d.generators.empty());
  EXPECT_EQ(d.remainder, (FiniteSet{4, 8}));

  EXPECT_THROW((void)decomposition_certificate(CertifiedSet::bundle(Family::A, 0, SymbolicSet::full(1))),
               PreconditionError);
}

TEST(Split, CoversPrefixAndFollowsIndexComparison) {
  EXPECT_TRUE(split_small(Family::A, {}, 1).c.empty());
  std::vector<Nat> prefix(500);
  for (Nat m = 0; m < prefix.size(); ++m) prefix[m] = 3 * m;
  for (std::size_t n = 1; n <= 2; ++n) {
    const SplitResult r = split_small(Family::A, prefix, n);
    EXPECT_EQ(r.c.size() + r.d.size(), prefix.size());
    for (Nat x : r.c) {
      std::vector<Point> lower;
      for (std::size_t l = 0; l < n; ++l) lower.push_back(oracle::cell(Family::A, x, l));
      EXPECT_GE(default_tuple_index(oracle::cell(Family::A, x, n)), default_stack_index(lower));
    }
    for (Nat x : r.d) {
      std::vector<Point> lower;
      for (std::size_t l = 0; l < n; ++l) lower.push_back(oracle::cell(Family::A, x, l));
      EXPECT_LT(default_tuple_index(oracle::cell(Family::A, x, n)), default_stack_index(lower));
    }
  }
}

TEST(Hierarchy, MonotoneAndStable) {
  Rng rng(77);
  for (int trial = 0; trial < 80; ++trial) {
    Rng r = rng.split(trial);
    const CertifiedSet a = random_certified_set(r, trial % 2 ? Family::B : Family::A, r.below(3));
    const std::size_t top = a.max_level();
    bool prev = false;
    for (std::size_t n = 0; n <= top + 3; ++n) {
      const bool now = jn_member(a, n);
      if (prev) EXPECT_TRUE(now) << trial << " n=" << n;
      if (n > top) EXPECT_EQ(now, jn_member(a, top));
      prev = now;
    }
    const auto c = finprime_member(a);
    EXPECT_EQ(c.has_value(), jn_member(a, top));
    if (c) EXPECT_TRUE(validate_rectangle(phi(a, c->n), c->rectangle));
  }
}

TEST(Hierarchy, IdealAxioms) {
  Rng rng(78);
  for (int trial = 0; trial < 60; ++trial) {
    Rng r = rng.split(trial);
    const CertifiedSet a = random_certified_set(r, Family::A, 2);
    const CertifiedSet b = random_certified_set(r, Family::A, 2);
    const bool ma = finprime_member(a).has_value();
    const bool mb = finprime_member(b).has_value();
    EXPECT_EQ(ma && mb, finprime_member(certified_union(a, b)).has_value());
    if (ma && certified_subset(b, a)) EXPECT_TRUE(mb);
  }
}

TEST(Hierarchy, GeneratorsBelongAndFullBundlesDoNot) {
  Rng rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    Rng r = rng.split(trial);
    const std::size_t l = r.below(3);
    EXPECT_TRUE(finprime_member(CertifiedSet::bundle(Family::A, l, random_small_set(r, l + 1))).has_value());
  }
  for (std::size_t l = 0; l <= 2; ++l) {
    EXPECT_FALSE(finprime_member(CertifiedSet::bundle(Family::A, l, SymbolicSet::full(l + 1))).has_value());
  }
}

}  // namespace
}  // namespace idealforge
