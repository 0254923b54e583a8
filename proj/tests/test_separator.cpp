#include "helpers.hpp"
#include "vsl/checker.hpp"
#include "vsl/constructions.hpp"
#include "vsl/separator.hpp"

#include <gtest/gtest.h>

using namespace vsl;
using namespace vsl::test;

namespace {

SemilinearConfigSet single(StateId q, IntVec base, std::vector<IntVec> periods) {
  SemilinearConfigSet S(base.size());
  S.add(q, LinearSet(std::move(base), std::move(periods)));
  return S;
}

}  // namespace

TEST(IsSeparator, Parity) {
  Vass v = loop_vass({2});
  const StateId q = v.state("q");
  EXPECT_EQ(is_separator(v, at(q, {0}), at(q, {1}), single(q, iv({0}), {iv({2})})).kind,
            SeparatorCheck::Kind::Verified);
  auto c = is_separator(v, at(q, {0}), at(q, {1}), single(q, iv({1}), {iv({2})}));
  EXPECT_EQ(c.kind, SeparatorCheck::Kind::Refuted);
  EXPECT_EQ(c.failed_axiom, 1);
  c = is_separator(v, at(q, {0}), at(q, {1}), single(q, iv({0}), {iv({1})}));
  EXPECT_EQ(c.kind, SeparatorCheck::Kind::Refuted);
  EXPECT_EQ(c.failed_axiom, 2);
  c = is_separator(v, at(q, {0}), at(q, {1}), single(q, iv({0}), {iv({4})}));
  EXPECT_EQ(c.kind, SeparatorCheck::Kind::Refuted);
  EXPECT_EQ(c.failed_axiom, 3);
}

TEST(MinimalSeparators, ParityOnlyEvens) {
  Vass v = loop_vass({2});
  const StateId q = v.state("q");
  const auto seps = minimal_separators(v, at(q, {0}), at(q, {3}), 2);
  ASSERT_EQ(seps.size(), 1u);
  EXPECT_EQ(seps[0], single(q, iv({0}), {iv({2})}));
}

TEST(MinimalSeparators, BudgetTooSmall) {
  Vass v = loop_vass({2});
  const StateId q = v.state("q");
  try {
    minimal_separators(v, at(q, {0}), at(q, {3}), 1);
    FAIL() << "expected BudgetExhausted";
  } catch (const VslError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExhausted);
  }
}

TEST(MinimalSeparators, ReachableTargetIsRejected) {
  Vass v = loop_vass({2});
  const StateId q = v.state("q");
  EXPECT_THROW(minimal_separators(v, at(q, {0}), at(q, {4}), 3), VslError);
}

TEST(MinimalSeparators, ToySlopeKeepsTheLinePeriod) {
  const SlopeFixture f = build_toy_slope();
  const auto seps = minimal_separators(f.vass, f.s, f.t, 9);
  ASSERT_FALSE(seps.empty());
  for (const auto& s : seps) {
    EXPECT_EQ(s.size(), Int(9));
    EXPECT_FALSE(proportional_periods(s, f.delta).empty());
    EXPECT_EQ(is_separator(f.vass, f.s, f.t, s).kind, SeparatorCheck::Kind::Verified);
  }
}

TEST(Decide, Parity) {
  Vass v = loop_vass({2});
  const StateId q = v.state("q");
  DualSchedule sch;
  sch.parallel = false;
  auto r = decide_dual(v, at(q, {0}), at(q, {4}), sch);
  ASSERT_EQ(r.kind, DualVerdict::Kind::RunFound);
  EXPECT_EQ(r.run->length(), 2u);
  r = decide_dual(v, at(q, {0}), at(q, {3}), sch);
  ASSERT_EQ(r.kind, DualVerdict::Kind::SeparatorFound);
  EXPECT_EQ(*r.separator, single(q, iv({0}), {iv({2})}));
}

TEST(Decide, ParallelAgrees) {
  Vass v = loop_vass({2});
  const StateId q = v.state("q");
  DualSchedule sch;
  sch.parallel = true;
  EXPECT_EQ(decide_dual(v, at(q, {0}), at(q, {4}), sch).kind, DualVerdict::Kind::RunFound);
  const auto r = decide_dual(v, at(q, {0}), at(q, {3}), sch);
  ASSERT_EQ(r.kind, DualVerdict::Kind::SeparatorFound);
  EXPECT_EQ(*r.separator, single(q, iv({0}), {iv({2})}));
}

TEST(Decide, ToySlopeVariants) {
  const SlopeFixture f = build_toy_slope();
  DualSchedule sch;
  sch.parallel = false;
  sch.max_separator_size = 9;
  // off the line a run exists
  auto r = decide_dual(f.vass, at(f.q, {0, 1}), f.t, sch);
  EXPECT_EQ(r.kind, DualVerdict::Kind::RunFound);
  r = decide_dual(f.vass, f.s, f.t, sch);
  ASSERT_EQ(r.kind, DualVerdict::Kind::SeparatorFound);
  EXPECT_EQ(r.separator->size(), Int(9));
}

TEST(Decide, TinyBudgetIsUndecided) {
  Vass v = loop_vass({2});
  const StateId q = v.state("q");
  DualSchedule sch;
  sch.parallel = false;
  sch.max_run_length = 3;
  sch.max_separator_size = 1;
  EXPECT_EQ(decide_dual(v, at(q, {0}), at(q, {3}), sch).kind, DualVerdict::Kind::Undecided);
}

TEST(Conclusion, WrongSlopeIsLackingAndNotASeparator) {
  const SlopeFixture f = build_toy_slope();
  const StateId qt = f.vass.state("q_t");
  SemilinearConfigSet S(2);
  S.add(f.q, LinearSet(iv({0, 0}), {iv({1, 1})}));
  S.add(qt, LinearSet(iv({1, 0}), {iv({1, 0}), iv({1, 1})}));
  const auto rep = verify_conclusion_simple({S}, f.delta);
  EXPECT_EQ(rep.checked, 1u);
  EXPECT_EQ(rep.lacking, std::vector<std::size_t>{0});
  EXPECT_EQ(is_separator(f.vass, f.s, f.t, S).kind, SeparatorCheck::Kind::Refuted);
}
