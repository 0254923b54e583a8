#include "helpers.hpp"
#include "vsl/constructions.hpp"
#include "vsl/explore.hpp"
#include "vsl/wqo.hpp"

#include <gtest/gtest.h>

using namespace vsl;
using namespace vsl::test;

namespace {

vsl::Run iterate(const Vass& v, const Configuration& s, TransitionId t, std::size_t n) {
  std::vector<TransitionId> path(n, t);
  return vsl::Run::replay(v, s, path);
}

}  // namespace

TEST(ConfigLeq, Basics) {
  Vass v(2);
  const StateId q = v.add_state("q");
  const StateId p = v.add_state("p");
  EXPECT_TRUE(config_leq(at(q, {1, 2}), at(q, {1, 3})));
  EXPECT_FALSE(config_leq(at(q, {1, 2}), at(p, {5, 5})));
  EXPECT_FALSE(config_leq(at(q, {2, 0}), at(q, {1, 9})));
}

TEST(Embedding, Reflexive) {
  Vass v = loop_vass({1});
  const vsl::Run r = iterate(v, at(v.state("q"), {0}), 0, 3);
  const auto e = find_embedding(r, r, Anchor::TargetAnchored);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->indices, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(is_embedding(r, r, *e));
}

TEST(Embedding, OneStepIntoTwo) {
  Vass v = loop_vass({1});
  const StateId q = v.state("q");
  const vsl::Run small = iterate(v, at(q, {0}), 0, 1);
  const vsl::Run large = iterate(v, at(q, {0}), 0, 2);
  const auto e = find_embedding(small, large, Anchor::TargetAnchored);
  ASSERT_TRUE(e);
  EXPECT_EQ(e->indices, std::vector<std::size_t>{1});
  EXPECT_TRUE(is_embedding(small, large, *e));
  EXPECT_FALSE(is_embedding(small, large, RunEmbedding{{0}, Anchor::TargetAnchored}));
  const auto s = find_embedding(small, large, Anchor::SourceAnchored);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->indices, std::vector<std::size_t>{0});
}

TEST(Embedding, DisjointTransitions) {
  Vass v(1);
  const StateId q = v.add_state("q");
  v.add_transition(q, iv({1}), q);
  v.add_transition(q, iv({2}), q);
  const vsl::Run a = iterate(v, at(q, {0}), 0, 2);
  const vsl::Run b = iterate(v, at(q, {0}), 1, 3);
  EXPECT_FALSE(find_embedding(a, b, Anchor::TargetAnchored));
}

TEST(Domination, PrefixesOfALoop) {
  Vass v = loop_vass({1});
  const StateId q = v.state("q");
  std::vector<vsl::Run> runs{iterate(v, at(q, {0}), 0, 1), iterate(v, at(q, {0}), 0, 2)};
  const auto pair = find_domination(runs, Anchor::TargetAnchored);
  ASSERT_TRUE(pair);
  EXPECT_EQ(*pair, (std::pair<std::size_t, std::size_t>{0, 1}));
}

TEST(Domination, Incomparable) {
  Vass v(2);
  const StateId q = v.add_state("q");
  v.add_transition(q, iv({1, 0}), q);
  v.add_transition(q, iv({0, 1}), q);
  std::vector<vsl::Run> runs{iterate(v, at(q, {0, 0}), 0, 1), iterate(v, at(q, {0, 0}), 1, 1)};
  EXPECT_FALSE(find_domination(runs, Anchor::TargetAnchored));
}

TEST(Domination, ToySlopeLineRuns) {
  const SlopeFixture f = build_toy_slope();
  std::vector<vsl::Run> runs;
  for (std::size_t n = 0; n <= 3; ++n) runs.push_back(iterate(f.vass, f.s, 0, n));
  EXPECT_TRUE(find_domination(runs, Anchor::TargetAnchored));
}

TEST(Domination, RequiresCommonSource) {
  Vass v = loop_vass({1});
  const StateId q = v.state("q");
  std::vector<vsl::Run> runs{vsl::Run(at(q, {0})), vsl::Run(at(q, {1}))};
  EXPECT_THROW(find_domination(runs, Anchor::TargetAnchored), VslError);
}

TEST(Amalgamate, Identity) {
  Vass v = loop_vass({1});
  const vsl::Run r = iterate(v, at(v.state("q"), {0}), 0, 2);
  const auto e = *find_embedding(r, r, Anchor::TargetAnchored);
  const Amalgam a = amalgamate(v, r, r, r, e, e);
  EXPECT_EQ(a.run, r);
}

TEST(Amalgamate, AddsBothSurpluses) {
  Vass v = loop_vass({1});
  const StateId q = v.state("q");
  const vsl::Run base = iterate(v, at(q, {0}), 0, 1);
  const vsl::Run big = iterate(v, at(q, {0}), 0, 2);
  const auto e = *find_embedding(base, big, Anchor::TargetAnchored);
  const Amalgam a = amalgamate(v, base, big, big, e, e);
  EXPECT_EQ(a.run.length(), 3u);
  EXPECT_EQ(a.run.target(), at(q, {3}));
  EXPECT_TRUE(is_embedding(base, a.run, a.embedding));
}

TEST(Amalgamate, TwoDirections) {
  Vass v(2);
  const StateId q = v.add_state("q");
  v.add_transition(q, iv({1, 0}), q);
  v.add_transition(q, iv({0, 1}), q);
  const vsl::Run base(at(q, {0, 0}));
  const vsl::Run r1 = iterate(v, at(q, {0, 0}), 0, 1);
  const vsl::Run r2 = iterate(v, at(q, {0, 0}), 1, 1);
  const auto e1 = *find_embedding(base, r1, Anchor::TargetAnchored);
  const auto e2 = *find_embedding(base, r2, Anchor::TargetAnchored);
  const Amalgam a = amalgamate(v, base, r1, r2, e1, e2);
  EXPECT_EQ(a.run.target(), at(q, {1, 1}));
  EXPECT_FALSE(validate_run(v, a.run));
}

TEST(Pump, ZeroAndOne) {
  Vass v = loop_vass({2});
  const StateId q = v.state("q");
  const vsl::Run base = iterate(v, at(q, {0}), 0, 1);
  const vsl::Run big = iterate(v, at(q, {0}), 0, 2);
  const auto e = *find_embedding(base, big, Anchor::TargetAnchored);
  EXPECT_EQ(pump_run(v, base, big, e, 0), base);
  EXPECT_EQ(pump_run(v, base, big, e, 1).target(), big.target());
  const vsl::Run five = pump_run(v, base, big, e, 5);
  EXPECT_EQ(five.target(), at(q, {12}));
  EXPECT_FALSE(validate_run(v, five));
}

TEST(Pump, ToySlopeIntoTarget) {
  // q(0,0) -> q(1,2) -> q_t(1,1) embeds into q(0,0) -> q(1,2) -> q(2,4) -> q_t(2,3)
  const SlopeFixture f = build_toy_slope();
  const std::vector<TransitionId> p1{0, 1}, p2{0, 0, 1};
  const vsl::Run small = vsl::Run::replay(f.vass, f.s, p1);
  const vsl::Run large = vsl::Run::replay(f.vass, f.s, p2);
  const auto e = find_embedding(small, large, Anchor::TargetAnchored);
  ASSERT_TRUE(e);
  for (std::size_t n = 0; n <= 4; ++n) {
    const vsl::Run p = pump_run(f.vass, small, large, *e, n);
    EXPECT_FALSE(validate_run(f.vass, p));
    EXPECT_EQ(p.target().vec, small.target().vec + Int(n) * iv({1, 2}));
  }
}
