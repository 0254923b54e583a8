#include "helpers.hpp"
#include "vsl/constructions.hpp"
#include "vsl/explore.hpp"
#include "vsl/relaxation.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

using namespace vsl;
using namespace vsl::test;

namespace {

SearchBounds box(long b) {
  SearchBounds s;
  s.norm_bound = b;
  return s;
}

}  // namespace

TEST(PostBounded, ParityProgression) {
  Vass v = loop_vass({2});
  const StateId q = v.state("q");
  const auto post = post_bounded(v, at(q, {0}), box(5));
  EXPECT_EQ(post.configs, (std::vector<Configuration>{at(q, {0}), at(q, {2}), at(q, {4})}));
  EXPECT_TRUE(post.pruned);
}

TEST(PostBounded, DecreasingChainIsExhausted) {
  Vass v = loop_vass({-1});
  const StateId q = v.state("q");
  const auto post = post_bounded(v, at(q, {3}), box(100));
  EXPECT_EQ(post.configs.size(), 4u);
  EXPECT_FALSE(post.pruned);
}

TEST(PostBounded, FractionFamilyReachesLinePoint) {
  const FamilyU u = build_Un(FractionSchedule::standard());
  const auto post = post_bounded(u.vass, u.initial, box(60));
  EXPECT_TRUE(post.contains(at(u.p[0], {16, 25, 0, 0})));
}

TEST(PreBounded, Parity) {
  Vass v = loop_vass({2});
  const StateId q = v.state("q");
  const auto pre = pre_bounded(v, at(q, {4}), box(10));
  EXPECT_EQ(pre.configs, (std::vector<Configuration>{at(q, {0}), at(q, {2}), at(q, {4})}));
}

TEST(PreBounded, NoTransitions) {
  Vass v(1);
  const StateId q = v.add_state("q");
  const auto pre = pre_bounded(v, at(q, {7}), box(10));
  EXPECT_EQ(pre.configs, std::vector<Configuration>{at(q, {7})});
  EXPECT_FALSE(pre.pruned);
}

TEST(PreBounded, ToySlopeCone) {
  const SlopeFixture f = build_toy_slope();
  const StateId qt = f.vass.state("q_t");
  const auto pre = pre_bounded(f.vass, f.t, box(12));
  for (long x = 0; x <= 12; ++x) {
    for (long y = 0; y <= 12; ++y) {
      EXPECT_EQ(pre.contains(at(qt, {x, y})), y >= 2 * x) << x << "," << y;
      // from q(x,y), going to q_t costs one y and the loop keeps y - 2x fixed
      EXPECT_EQ(pre.contains(at(f.q, {x, y})), y >= 2 * x + 1) << x << "," << y;
    }
  }
}

TEST(ShortestRun, Parity) {
  Vass v = loop_vass({2});
  const StateId q = v.state("q");
  auto r = shortest_run(v, at(q, {0}), at(q, {4}), box(100));
  ASSERT_EQ(r.kind, ReachVerdict::Kind::Reachable);
  EXPECT_EQ(r.witness->length(), 2u);
  r = shortest_run(v, at(q, {0}), at(q, {3}), box(10));
  EXPECT_EQ(r.kind, ReachVerdict::Kind::Exhausted);
  SearchBounds plain = box(10);
  plain.prune_dead = false;
  r = shortest_run(v, at(q, {0}), at(q, {3}), plain);
  EXPECT_EQ(r.kind, ReachVerdict::Kind::NotReachableWithinBounds);
}

TEST(ShortestRun, LengthBound) {
  Vass v = loop_vass({1});
  const StateId q = v.state("q");
  SearchBounds b = box(100);
  b.length_bound = 3;
  EXPECT_EQ(shortest_run(v, at(q, {0}), at(q, {5}), b).kind, ReachVerdict::Kind::NotReachableWithinBounds);
  b.length_bound = 5;
  EXPECT_EQ(shortest_run(v, at(q, {0}), at(q, {5}), b).kind, ReachVerdict::Kind::Reachable);
}

TEST(ShortestRun, WitnessValidates) {
  const SlopeFixture f = build_toy_slope();
  const StateId qt = f.vass.state("q_t");
  const auto r = shortest_run(f.vass, at(f.q, {0, 1}), at(qt, {0, 0}), box(20));
  ASSERT_EQ(r.kind, ReachVerdict::Kind::Reachable);
  EXPECT_FALSE(validate_run(f.vass, *r.witness));
  EXPECT_EQ(r.witness->length(), 1u);
}

TEST(EnumerateRuns, ParityLengthTwo) {
  Vass v = loop_vass({2});
  SearchBounds b = box(100);
  b.length_bound = 2;
  const auto runs = enumerate_runs(v, at(v.state("q"), {0}), b);
  ASSERT_EQ(runs.size(), 3u);
  EXPECT_EQ(runs[0].length(), 0u);
  EXPECT_EQ(runs[2].length(), 2u);
}

TEST(EnumerateRuns, GuardBlocksDecrement) {
  Vass v(1);
  const StateId q = v.add_state("q");
  v.add_transition(q, iv({1}), q);
  v.add_transition(q, iv({-1}), q);
  SearchBounds b = box(100);
  b.length_bound = 1;
  const auto runs = enumerate_runs(v, at(q, {0}), b);
  std::size_t nonempty = 0;
  for (const vsl::Run& r : runs) nonempty += r.length() == 1;
  EXPECT_EQ(nonempty, 1u);
}

TEST(EnumerateRuns, ToySlopeMatchesRecursiveCount) {
  const SlopeFixture f = build_toy_slope();
  std::function<std::size_t(const Configuration&, int)> count = [&](const Configuration& c, int left) {
    std::size_t n = 1;
    if (left == 0) return n;
    for (const Transition& t : f.vass.transitions()) {
      if (t.src != c.state) continue;
      Configuration d{t.dst, c.vec + t.effect};
      if (is_nonneg(d.vec)) n += count(d, left - 1);
    }
    return n;
  };
  SearchBounds b = box(1000);
  b.length_bound = 4;
  EXPECT_EQ(enumerate_runs(f.vass, f.s, b).size(), count(f.s, 4));
}

TEST(StateEquation, ParityIsIntegerInfeasible) {
  Vass v = loop_vass({2});
  const StateId q = v.state("q");
  StateEquation eq(v, at(q, {3}));
  EXPECT_TRUE(eq.dead(at(q, {0})));
  EXPECT_FALSE(eq.dead(at(q, {1})));
}

TEST(StateEquation, RationalInfeasibleNeedsNegativeCount) {
  Vass v = loop_vass({1});
  const StateId q = v.state("q");
  StateEquation eq(v, at(q, {2}));
  EXPECT_TRUE(eq.dead(at(q, {5})));
  EXPECT_FALSE(eq.rational_feasible(at(q, {5})));
  EXPECT_TRUE(eq.integer_feasible(at(q, {5})));
}
