#include "helpers.hpp"
#include "vsl/constructions.hpp"
#include "vsl/text_format.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace vsl;
using namespace vsl::test;

TEST(Text, VassRoundTrip) {
  const FamilyV v = build_Vn(FractionSchedule::standard());
  const std::string text = format_vass(v.vass);
  const Vass back = parse_vass(text);
  EXPECT_EQ(format_vass(back), text);
  EXPECT_EQ(back.num_transitions(), v.vass.num_transitions());
}

TEST(Text, CommentsAndBlankLines) {
  const Vass v = parse_vass("# parity\ndim 1\n\nstate q   # the only state\ntrans q q 2\n");
  EXPECT_EQ(v.num_states(), 1u);
  EXPECT_EQ(v.transition(0).effect, iv({2}));
}

TEST(Text, ErrorsCarryLineNumbers) {
  try {
    parse_vass("dim 2\nstate q\ntrans q q 1\n");
    FAIL();
  } catch (const VslError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(parse_vass("state q\n"), VslError);
  EXPECT_THROW(parse_vass("dim 1\nstate q\ntrans q p 1\n"), VslError);
  EXPECT_THROW(parse_vass("dim x\n"), VslError);
}

TEST(Text, ConfigurationAndRun) {
  const SlopeFixture f = build_toy_slope();
  const Configuration c = parse_configuration(f.vass, "q 3 6");
  EXPECT_EQ(c, at(f.q, {3, 6}));
  EXPECT_EQ(format_configuration(f.vass, c), "q 3 6");
  EXPECT_THROW(parse_configuration(f.vass, "q 3"), VslError);
  EXPECT_THROW(parse_configuration(f.vass, "q -1 0"), VslError);
  const std::vector<TransitionId> path{0, 0, 1, 2};
  const vsl::Run r = vsl::Run::replay(f.vass, f.s, path);
  const vsl::Run back = parse_run(f.vass, format_run(f.vass, r));
  EXPECT_EQ(back, r);
  EXPECT_THROW(parse_run(f.vass, "source q 0 0\npath 2\n"), VslError);
}

TEST(Text, SemilinearRoundTrip) {
  const SlopeFixture f = build_toy_slope();
  SemilinearConfigSet S(2);
  S.add(f.q, LinearSet(iv({0, 0}), {iv({1, 2})}));
  S.add(f.vass.state("q_t"), LinearSet(iv({1, 0}), {iv({1, 0}), iv({1, 1})}));
  const std::string text = format_semilinear(f.vass, S);
  EXPECT_EQ(parse_semilinear(f.vass, text), S);
  EXPECT_THROW(parse_semilinear(f.vass, "base 0 0\n"), VslError);
}

TEST(Text, GoldenArtifactsReparse) {
  namespace fs = std::filesystem;
  std::size_t seen = 0;
  for (const auto& e : fs::directory_iterator(VSL_GOLDEN_DIR)) {
    if (e.path().extension() != ".vass") continue;
    const Vass v = parse_vass(read_file(e.path().string()));
    EXPECT_EQ(format_vass(parse_vass(format_vass(v))), format_vass(v));
    ++seen;
    const fs::path sep = e.path().parent_path() / "decide_odd.sep";
    if (e.path().stem() == "parity") {
      const auto s = parse_semilinear(v, read_file(sep.string()));
      EXPECT_EQ(format_semilinear(v, s), read_file(sep.string()));
      for (const char* run : {"small.run", "large.run", "pumped.run"}) {
        const vsl::Run r = parse_run(v, read_file((e.path().parent_path() / run).string()));
        EXPECT_FALSE(validate_run(v, r));
      }
    }
  }
  EXPECT_GE(seen, 2u);
}
