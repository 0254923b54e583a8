#pragma once

// Desk-scale checks of the hypotheses and conclusions of the two separator
// lower-bound theorems.

#include "vsl/core.hpp"
#include "vsl/explore.hpp"
#include "vsl/numtheory.hpp"
#include "vsl/semilinear.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vsl {

enum class CheckStatus { Verified, VerifiedOnSamples, Refuted, Unknown, EvidenceOnly };

const char* to_string(CheckStatus s) noexcept;

struct ConditionReport {
  int condition = 0;
  CheckStatus status = CheckStatus::Unknown;
  std::string detail;
  bool pruned = false;
  std::optional<Run> witness_run;
  std::optional<Configuration> witness_config;
  std::vector<std::string> samples;  // human-readable list of sampled instances
};

struct CheckReport {
  std::vector<ConditionReport> conditions;
  Int norm_bound;

  const ConditionReport& condition(int k) const;
  bool all_hold() const;  // no Refuted and no Unknown
};

/// The line a + N delta.
struct LineSpec {
  IntVec a;
  IntVec delta;
};

struct SimpleSamples {
  std::vector<std::size_t> n{0, 1, 2, 3};
  std::vector<std::size_t> m{1, 2};
};

CheckReport check_thm_simple(const Vass& vass, const Configuration& s, const Configuration& t,
                             StateId q, const LineSpec& line, const SearchBounds& bounds,
                             const SimpleSamples& samples = {});

struct AdvancedOptions {
  /// Offsets u for the second condition; empty means {0} u {e_i : i in supp(lin2)}.
  std::vector<IntVec> offsets;
  /// Maximum run length for sampling runs in the third condition.
  std::size_t run_length = 8;
};

CheckReport check_thm_advanced(const Vass& vass, const Configuration& s, const Configuration& t,
                               StateId q, const LinearFunction& lin1, const LinearFunction& lin2,
                               const Rational& r, const SearchBounds& bounds,
                               const AdvancedOptions& options = {});

struct ConclusionReport {
  std::size_t checked = 0;
  std::vector<std::size_t> lacking;  // indices of separators without a suitable period
};

ConclusionReport verify_conclusion_simple(const std::vector<SemilinearConfigSet>& separators,
                                          const IntVec& delta);

ConclusionReport verify_conclusion_advanced(const std::vector<SemilinearConfigSet>& separators,
                                            const LinearFunction& lin1, const LinearFunction& lin2,
                                            const Rational& r);

}  // namespace vsl
