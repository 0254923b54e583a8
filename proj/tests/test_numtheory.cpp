#include "helpers.hpp"
#include "vsl/numtheory.hpp"

#include <gtest/gtest.h>

#include <map>
#include <queue>
#include <set>

using namespace vsl;
using namespace vsl::test;

TEST(Gcd, Lists) {
  EXPECT_EQ(gcd_list(iv({4, 6})), Int(2));
  EXPECT_EQ(gcd_list(iv({5})), Int(5));
  EXPECT_EQ(gcd_list(iv({0, 0, 3})), Int(3));
}

TEST(Reduce, Examples) {
  auto [l, m] = reduce(LinearFunction(iv({2, 4})));
  EXPECT_EQ(l.coeffs(), iv({1, 2}));
  EXPECT_EQ(m, Int(2));
  std::tie(l, m) = reduce(LinearFunction(iv({1, 2})));
  EXPECT_EQ(m, Int(1));
  std::tie(l, m) = reduce(LinearFunction(iv({6, 9, 0})));
  EXPECT_EQ(l.coeffs(), iv({2, 3, 0}));
  EXPECT_EQ(m, Int(3));
  EXPECT_TRUE(l.is_reduced());
}

TEST(Bezout, AtTheThreshold) {
  const IntVec a = iv({4, 6});
  const auto b = bezout_nonneg(a, Int(60));
  ASSERT_TRUE(b);
  EXPECT_EQ(a[0] * (*b)[0] + a[1] * (*b)[1], Int(60));
  EXPECT_GE((*b)[0], 0);
  EXPECT_GE((*b)[1], 0);
}

TEST(Bezout, Trivial) {
  EXPECT_EQ(*bezout_nonneg(iv({3}), Int(0)), std::vector<Int>{Int(0)});
  EXPECT_FALSE(bezout_nonneg(iv({4, 6}), Int(5)));
  EXPECT_FALSE(bezout_nonneg(iv({5, 7}), Int(23)));
}

TEST(Bezout, LargeTarget) {
  const IntVec a = iv({6, 10, 15});
  const Int s = parse_int("1000000000000000000007");
  const auto b = bezout_nonneg(a, s);
  ASSERT_TRUE(b);
  Int sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_GE((*b)[i], 0);
    sum += a[i] * (*b)[i];
  }
  EXPECT_EQ(sum, s);
}

TEST(ZeroSet, Examples) {
  auto z = zero_set(LinearFunction(iv({1, 2})));
  EXPECT_EQ(std::set<IntVec>(z.begin(), z.end()), (std::set<IntVec>{iv({2, -1}), iv({-2, 1})}));
  EXPECT_TRUE(zero_set(LinearFunction(iv({1, 0}))).empty());
  z = zero_set(LinearFunction(iv({1, 1, 1})));
  EXPECT_EQ(z.size(), 6u);
  for (const IntVec& v : z) EXPECT_EQ(LinearFunction(iv({1, 1, 1}))(v), 0);
}

namespace {

void expect_valid(const LinearFunction& lin, const IntVec& u, const IntVec& v, const StepPath& p) {
  const auto z = zero_set(lin);
  const std::set<IntVec> zs(z.begin(), z.end());
  ASSERT_FALSE(p.points.empty());
  EXPECT_EQ(p.points.front(), u);
  EXPECT_EQ(p.points.back(), v);
  for (std::size_t i = 0; i < p.points.size(); ++i) {
    EXPECT_TRUE(is_nonneg(p.points[i]));
    if (i > 0) EXPECT_TRUE(zs.count(p.points[i] - p.points[i - 1]));
  }
}

}  // namespace

TEST(ZeroPath, Trivial) {
  const auto p = zero_run_path(LinearFunction(iv({1, 1})), iv({2, 2}), iv({2, 2}));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->length(), 0u);
}

TEST(ZeroPath, SumOfTwo) {
  const LinearFunction lin(iv({1, 1}));
  const auto p = zero_run_path(lin, iv({3, 0}), iv({0, 3}));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->length(), 3u);
  expect_valid(lin, iv({3, 0}), iv({0, 3}), *p);
}

TEST(ZeroPath, WeightedAtThreshold) {
  const LinearFunction lin(iv({1, 2}));
  const auto p = zero_run_path(lin, iv({16, 0}), iv({0, 8}));
  ASSERT_TRUE(p);
  expect_valid(lin, iv({16, 0}), iv({0, 8}), *p);
}

TEST(ZeroPath, OffSupportCoordinatesStay) {
  const LinearFunction lin(iv({2, 0, 3, 1}));
  const IntVec u = iv({40, 7, 0, 5}), v = iv({0, 7, 20, 25});
  const auto p = zero_run_path(lin, u, v);
  ASSERT_TRUE(p);
  expect_valid(lin, u, v, *p);
}

TEST(ZeroPath, Preconditions) {
  EXPECT_THROW(zero_run_path(LinearFunction(iv({2, 4})), iv({2, 0}), iv({0, 1})), VslError);
  EXPECT_THROW(zero_run_path(LinearFunction(iv({1, 1})), iv({2, 0}), iv({0, 1})), VslError);
  EXPECT_THROW(zero_run_path(LinearFunction(iv({1, 0})), iv({2, 0}), iv({2, 1})), VslError);
}

TEST(ZeroPath, BelowThresholdMatchesSearch) {
  // Lin = 2x1 + 3x2 + 5x3, threshold 3 * 125; compare existence with a BFS over the level set
  const LinearFunction lin(iv({2, 3, 5}));
  const auto z = zero_set(lin);
  for (long level = 0; level <= 24; ++level) {
    std::vector<IntVec> pts;
    for (long a = 0; 2 * a <= level; ++a)
      for (long b = 0; 2 * a + 3 * b <= level; ++b)
        if ((level - 2 * a - 3 * b) % 5 == 0) pts.push_back(iv({a, b, (level - 2 * a - 3 * b) / 5}));
    for (const IntVec& u : pts) {
      std::set<IntVec> seen{u};
      std::queue<IntVec> todo;
      todo.push(u);
      while (!todo.empty()) {
        const IntVec c = todo.front();
        todo.pop();
        for (const IntVec& s : z) {
          const IntVec n = c + s;
          if (is_nonneg(n) && seen.insert(n).second) todo.push(n);
        }
      }
      for (const IntVec& v : pts) {
        const auto p = zero_run_path(lin, u, v);
        ASSERT_EQ(p.has_value(), seen.count(v) > 0) << "level " << level;
        if (p) expect_valid(lin, u, v, *p);
      }
    }
  }
}
