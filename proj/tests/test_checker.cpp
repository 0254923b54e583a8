#include "helpers.hpp"
#include "vsl/checker.hpp"
#include "vsl/constructions.hpp"
#include "vsl/separator.hpp"

#include <gtest/gtest.h>

using namespace vsl;
using namespace vsl::test;

namespace {

SearchBounds box(long b) {
  SearchBounds s;
  s.norm_bound = b;
  return s;
}

}  // namespace

TEST(Simple, ToySlopeHolds) {
  const SlopeFixture f = build_toy_slope();
  const auto r = check_thm_simple(f.vass, f.s, f.t, f.q, {f.a, f.delta}, box(50));
  EXPECT_EQ(r.condition(1).status, CheckStatus::Verified);
  EXPECT_EQ(r.condition(2).status, CheckStatus::Verified);
  EXPECT_FALSE(r.condition(2).pruned);
  EXPECT_EQ(r.condition(3).status, CheckStatus::VerifiedOnSamples);
  EXPECT_EQ(r.condition(4).status, CheckStatus::VerifiedOnSamples);
  EXPECT_TRUE(r.all_hold());
}

TEST(Simple, StableAcrossBounds) {
  const SlopeFixture f = build_toy_slope();
  for (long b : {10, 20, 35}) {
    const auto r = check_thm_simple(f.vass, f.s, f.t, f.q, {f.a, f.delta}, box(b));
    for (const auto& c : r.conditions) EXPECT_NE(c.status, CheckStatus::Refuted) << "B=" << b;
  }
}

TEST(Simple, RunToTargetRefutes) {
  const SlopeFixture f = build_exact_slope();
  const auto r = check_thm_simple(f.vass, f.s, f.t, f.q, {f.a, f.delta}, box(20));
  ASSERT_EQ(r.condition(2).status, CheckStatus::Refuted);
  ASSERT_TRUE(r.condition(2).witness_run);
  EXPECT_EQ(r.condition(2).witness_run->target(), f.t);
  EXPECT_FALSE(r.all_hold());
}

TEST(Simple, FractionFamily) {
  const FamilyV v = build_Vn(FractionSchedule::standard());
  SimpleSamples s;
  s.n = {0, 1};
  const auto r = check_thm_simple(v.vass, v.s, v.t, v.q, {v.a, v.delta}, box(60), s);
  EXPECT_EQ(r.condition(1).status, CheckStatus::Verified);
  EXPECT_TRUE(r.condition(2).status == CheckStatus::Verified || r.condition(2).status == CheckStatus::Unknown);
  EXPECT_EQ(r.condition(3).status, CheckStatus::VerifiedOnSamples);
  EXPECT_EQ(r.condition(4).status, CheckStatus::VerifiedOnSamples);
}

TEST(Advanced, ExactSlope) {
  const SlopeFixture f = build_exact_slope();
  const LinearFunction x1(iv({1, 0})), x2(iv({0, 1}));
  const auto r = check_thm_advanced(f.vass, f.s, f.t, f.q, x1, x2, Rational(1, 2), box(20));
  EXPECT_EQ(r.condition(1).status, CheckStatus::VerifiedOnSamples);
  EXPECT_EQ(r.condition(2).status, CheckStatus::VerifiedOnSamples);
  EXPECT_EQ(r.condition(3).status, CheckStatus::Verified);
  EXPECT_EQ(r.condition(4).status, CheckStatus::EvidenceOnly);
}

TEST(Advanced, SteeperLoopRefutes) {
  const SlopeFixture f = build_toy_slope(iv({1, 3}));
  const LinearFunction x1(iv({1, 0})), x2(iv({0, 1}));
  const auto r = check_thm_advanced(f.vass, f.s, f.t, f.q, x1, x2, Rational(1, 2), box(20));
  ASSERT_EQ(r.condition(1).status, CheckStatus::Refuted);
  ASSERT_TRUE(r.condition(1).witness_config);
  EXPECT_EQ(r.condition(1).witness_config->state, f.q);
}

TEST(Conclusion, Empty) {
  EXPECT_EQ(verify_conclusion_simple({}, iv({1, 2})).checked, 0u);
  EXPECT_TRUE(verify_conclusion_advanced({}, LinearFunction(iv({1, 0})), LinearFunction(iv({0, 1})), Rational(1))
                  .lacking.empty());
}

TEST(Conclusion, ModifiedExactSlope) {
  // the ratio modification adds (0,-1) at q; t + e2 is then separated by y <= 2x
  const SlopeFixture f = build_exact_slope();
  const LinearFunction x1(iv({1, 0})), x2(iv({0, 1}));
  const Vass w = modify_vass(f.vass, f.q, x1, x2);
  const auto seps = minimal_separators(w, f.s, Configuration{f.t.state, iv({0, 1})}, 8);
  ASSERT_FALSE(seps.empty());
  const auto rep = verify_conclusion_advanced(seps, x1, x2, Rational(1, 2));
  EXPECT_EQ(rep.checked, seps.size());
  EXPECT_TRUE(rep.lacking.empty());
}
