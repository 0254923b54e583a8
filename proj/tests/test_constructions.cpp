#include "helpers.hpp"
#include "vsl/constructions.hpp"
#include "vsl/explore.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace vsl;
using namespace vsl::test;

TEST(Schedule, Standard) {
  const auto s = FractionSchedule::standard();
  EXPECT_EQ(s.n(), 1u);
  EXPECT_EQ(s.f(), Rational(25, 16));
  EXPECT_EQ(s.big_n(), Int(16));
  EXPECT_TRUE(s.size_compliant());
}

TEST(Schedule, Validation) {
  EXPECT_THROW((FractionSchedule{{{Int(4), Int(5)}}}.validate()), VslError);
  EXPECT_THROW((FractionSchedule{{{Int(10), Int(8)}}}.validate()), VslError);
  EXPECT_THROW((FractionSchedule{{{Int(5), Int(4)}, {Int(9), Int(8)}}}.validate()), VslError);
  EXPECT_THROW(FractionSchedule{}.validate(), VslError);
  const FractionSchedule two{{{Int(9), Int(8)}, {Int(17), Int(16)}}};
  EXPECT_THROW(two.validate(), VslError);  // 17/16 < 9/8
  const FractionSchedule ok{{{Int(17), Int(16)}, {Int(9), Int(8)}}};
  EXPECT_NO_THROW(ok.validate());
  EXPECT_FALSE(ok.size_compliant());
}

TEST(FamilyV, FirstInstance) {
  const FamilyV v = build_Vn(FractionSchedule::standard());
  EXPECT_EQ(v.delta, iv({16, 25, 0, 0}));
  EXPECT_EQ(v.big_n, Int(16));
  EXPECT_EQ(v.f, Rational(25, 16));
  EXPECT_EQ(v.vass.state_name(v.q), "p_0");
  // q(a) is reachable
  SearchBounds b;
  b.norm_bound = 40;
  EXPECT_EQ(shortest_run(v.vass, v.s, Configuration{v.q, v.a}, b).kind, ReachVerdict::Kind::Reachable);
}

TEST(FamilyU, AcceptingRunExists) {
  const FamilyU u = build_Un(FractionSchedule::standard());
  SearchBounds b;
  b.norm_bound = 60;
  const auto r = shortest_run(u.vass, u.initial, u.accepting, b);
  ASSERT_EQ(r.kind, ReachVerdict::Kind::Reachable);
  EXPECT_FALSE(validate_run(u.vass, *r.witness));
}

TEST(Modify, ThreeDimensions) {
  const auto loops = modification_loops(LinearFunction(iv({1, 2, 0})), LinearFunction(iv({0, 0, 1})));
  EXPECT_EQ(std::set<IntVec>(loops.begin(), loops.end()),
            (std::set<IntVec>{iv({0, 0, -1}), iv({2, -1, 0}), iv({-2, 1, 0})}));
  EXPECT_EQ(loops.size(), 3u);
}

TEST(Modify, FreeCoordinate) {
  const auto loops = modification_loops(LinearFunction(iv({1, 2, 0, 0})), LinearFunction(iv({0, 0, 1, 0})));
  const std::set<IntVec> got(loops.begin(), loops.end());
  EXPECT_TRUE(got.count(iv({0, 0, 0, 1})));
  EXPECT_TRUE(got.count(iv({0, 0, 0, -1})));
  EXPECT_EQ(loops.size(), 5u);
}

TEST(Modify, OverlappingSupports) {
  try {
    modification_loops(LinearFunction(iv({1, 1})), LinearFunction(iv({0, 1})));
    FAIL();
  } catch (const VslError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OverlappingSupports);
  }
}

TEST(Modify, DecrementLoop) {
  const SlopeFixture f = build_exact_slope();
  const Vass w = add_decrement_loop(f.vass, f.q, 1);
  ASSERT_EQ(w.num_transitions(), f.vass.num_transitions() + 1);
  const Transition& t = w.transition(w.num_transitions() - 1);
  EXPECT_EQ(t.effect, iv({0, -1}));
  EXPECT_EQ(t.src, f.q);
  EXPECT_EQ(t.dst, f.q);
}

TEST(GadgetB, Triples) {
  const Gadget g = build_gadget_B();
  for (long k : {0, 2, 5}) {
    std::vector<TransitionId> path{0};
    path.insert(path.end(), k, 1);
    const vsl::Run r = vsl::Run::replay(g.vass, g.entry, path);
    EXPECT_EQ(r.target(), at(g.exit, {3, k, 3 * k}));
  }
}

TEST(ZeroTest, MaximalDecrease) {
  const Gadget g = build_zero_test_gadget(Int(2));
  auto best = [&](long a, long abar) {
    SearchBounds b;
    b.norm_bound = 10;
    const auto post = post_bounded(g.vass, at(g.entry.state, {a, abar, 2, 4}), b);
    long m = -1;
    for (const auto& c : post.configs)
      if (c.state == g.exit) m = std::max(m, static_cast<long>(4 - c.vec[3]));
    return m;
  };
  EXPECT_EQ(best(0, 2), 4);
  EXPECT_LT(best(1, 1), 4);
  EXPECT_EQ(g.entry.vec, iv({0, 2, 2, 4}));
  EXPECT_THROW(build_zero_test_gadget(Int(0)), VslError);
}

TEST(ToySlope, Shape) {
  const SlopeFixture f = build_toy_slope();
  EXPECT_EQ(f.vass.num_states(), 2u);
  EXPECT_EQ(f.vass.num_transitions(), 4u);
  EXPECT_EQ(f.delta, iv({1, 2}));
  EXPECT_THROW(build_toy_slope(iv({1, 2, 3})), VslError);
}
