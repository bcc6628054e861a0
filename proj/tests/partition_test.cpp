#include <gtest/gtest.h>

#include <set>

#include "idealforge/errors.hpp"
#include "idealforge/oracles/brute.hpp"
#include "idealforge/partition.hpp"
#include "idealforge/random.hpp"

namespace idealforge {
namespace {

TEST(Coding, EmptyStackIsZero) {
  EXPECT_TRUE(decode(0).empty());
  EXPECT_EQ(encode({}), 0u);
}

TEST(Coding, RoundTripOnInitialSegment) {
  for (Nat m = 0; m < 10000; ++m) {
    const Stack st = decode(m);
    ASSERT_EQ(encode(st), m);
    ASSERT_EQ(st, oracle::decode_stack(m));
    for (std::size_t e = 0; e < st.size(); ++e) ASSERT_EQ(st[e].size(), e + 1);
  }
}

TEST(Coding, RoundTripOnRandomSingletonStacks) {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const Stack st{{rng.below(1u << 20)}};
    EXPECT_EQ(decode(encode(st)), st);
  }
}

TEST(Coding, RejectsStacksOutsideTheCodeSpace) {
  EXPECT_THROW((void)encode({{Nat{1} << 40}, {Nat{1} << 40, 1}}), ResourceError);
  EXPECT_THROW((void)encode({{1, 2}}), ArityError);
}

TEST(Permutation, FamilyBIsAnInvolution) {
  for (Nat m = 0; m < 5000; ++m) {
    EXPECT_EQ(permute(Family::A, m), m);
    EXPECT_EQ(permute(Family::B, permute(Family::B, m)), m);
    EXPECT_EQ(permute(Family::B, m), oracle::cantor_swap(m));
  }
  EXPECT_EQ(parse_family("B"), Family::B);
  EXPECT_THROW((void)parse_family("C"), PreconditionError);
}

TEST(Cells, TotalAndSingleValued) {
  for (Family f : {Family::A, Family::B}) {
    for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(cell_of(f, 0, n), Point(n + 1, 0));
    for (Nat m = 0; m < 10000; ++m) {
      for (std::size_t n = 0; n <= 4; ++n) {
        const Point s = cell_of(f, m, n);
        ASSERT_EQ(s.size(), n + 1);
        ASSERT_EQ(s, oracle::cell(f, m, n));
      }
    }
  }
}

TEST(Intersection, Examples) {
  const std::map<std::size_t, Point> cons{{0, {5}}, {1, {2, 7}}};
  const std::vector<Nat> three = enumerate_intersection(Family::A, cons, 3);
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(std::set<Nat>(three.begin(), three.end()).size(), 3u);
  for (Nat m : three) {
    EXPECT_EQ(oracle::decode_stack(m).at(0), (Point{5}));
    EXPECT_EQ(oracle::decode_stack(m).at(1), (Point{2, 7}));
  }
  EXPECT_EQ(enumerate_intersection(Family::A, CellConstraints{}, 5), (std::vector<Nat>{0, 1, 2, 3, 4}));

  const CellConstraints zero{{{0, {0}}}, std::nullopt};
  const std::vector<Nat> first = enumerate_intersection(Family::A, zero, 200);
  EXPECT_EQ(first, oracle::filter_intersection(Family::A, zero, first.back() + 1));
  EXPECT_THROW((void)enumerate_intersection(Family::A, std::map<std::size_t, Point>{{1, {1}}}, 1), ArityError);
}

TEST(Intersection, IndependentCellsAreInfinite) {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    Rng r = rng.split(trial);
    const Family f = trial % 2 ? Family::B : Family::A;
    CellConstraints c;
    const std::size_t levels = 1 + r.below(4);
    for (std::size_t k = 0; k < levels; ++k) {
      const std::size_t n = r.below(4);
      Point t(n + 1);
      for (Nat& v : t) v = r.below(8);
      c.cells.insert_or_assign(n, t);
    }
    const std::vector<Nat> xs = enumerate_intersection(f, c, 50);
    ASSERT_EQ(xs.size(), 50u);
    EXPECT_TRUE(std::is_sorted(xs.begin(), xs.end()));
    EXPECT_EQ(std::adjacent_find(xs.begin(), xs.end()), xs.end());
    for (Nat m : xs) EXPECT_TRUE(oracle::meets(f, m, c));
  }
}

TEST(Intersection, DeepCellsStayWithinMemory) {
  for (Family f : {Family::A, Family::B}) {
    const std::map<std::size_t, Point> deep{{4, {7, 7, 7, 7, 7}}};
    const std::vector<Nat> xs = enumerate_intersection(f, deep, 50);
    ASSERT_EQ(xs.size(), 50u);
    for (Nat m : xs) EXPECT_EQ(oracle::cell(f, m, 4), (Point{7, 7, 7, 7, 7}));
  }
}

TEST(Intersection, BoundedSearchAgreesWithFilter) {
  const CellConstraints c{{{1, {0, 1}}}, std::pair<std::size_t, std::size_t>{2, 3}};
  for (Family f : {Family::A, Family::B}) {
    EXPECT_EQ(intersection_below(f, c, 1 << 14), oracle::filter_intersection(f, c, (1 << 14) + 1));
  }
}

}  // namespace
}  // namespace idealforge
