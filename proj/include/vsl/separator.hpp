#pragma once

// Separators (inductive invariants containing s and avoiding t) and the dual
// run/separator procedure.

#include "vsl/core.hpp"
#include "vsl/explore.hpp"
#include "vsl/semilinear.hpp"

#include <atomic>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace vsl {

struct SeparatorCheck {
  enum class Kind { Verified, Refuted, Unknown };
  Kind kind = Kind::Unknown;
  int failed_axiom = 0;  // 1: s outside, 2: t inside, 3: not invariant
  std::string reason;
  std::optional<InvarianceVerdict> invariance;
};

const char* to_string(SeparatorCheck::Kind kind) noexcept;

SeparatorCheck is_separator(const Vass& vass, const Configuration& s, const Configuration& t,
                            const SemilinearConfigSet& set, const InvarianceOptions& options = {});

struct SeparatorOptions {
  /// Configurations reachable from s (resp. reaching t) within this norm are
  /// forced inside (resp. outside) every candidate.
  Int sample_box = 10;
  InvarianceOptions invariance;
};

using Clock = std::chrono::steady_clock;

/// Exhaustive search for separators of a given size. Candidates are unions of
/// linear components containing every sampled configuration of post(s) and no
/// sampled configuration of pre(t); each is then checked with both invariance
/// tiers. Components subsumed by another component of the same candidate are
/// never combined, since dropping them gives a smaller equivalent set.
class SeparatorSearch {
 public:
  SeparatorSearch(const Vass& vass, Configuration s, Configuration t, std::size_t max_size,
                  SeparatorOptions options = {});

  struct Tier {
    std::vector<SemilinearConfigSet> separators;  // canonical, sorted
    std::vector<SemilinearConfigSet> undecided;   // invariance unknown
    std::size_t candidates = 0;
    bool interrupted = false;
  };

  Tier search(std::size_t size, bool stop_at_first = false,
              std::optional<Clock::time_point> deadline = std::nullopt,
              const std::atomic<bool>* cancel = nullptr) const;

  /// t was met while sampling post(s): a run exists.
  bool target_sampled() const noexcept { return target_sampled_; }
  std::size_t max_size() const noexcept { return max_size_; }
  const std::vector<Configuration>& must_in() const noexcept { return must_in_; }
  const std::vector<Configuration>& must_out() const noexcept { return must_out_; }

 private:
  struct Candidate {
    Component comp;
    std::size_t size;
    std::vector<std::uint64_t> cover;
  };

  const Vass* vass_;
  Configuration s_;
  Configuration t_;
  std::size_t max_size_;
  SeparatorOptions options_;
  std::vector<Configuration> must_in_;
  std::vector<Configuration> must_out_;
  bool target_sampled_ = false;
  std::vector<Candidate> pool_;
  std::vector<std::vector<std::size_t>> coverers_;  // per must_in point
};

/// All verified separators of the least size <= size_budget. Throws
/// BudgetExhausted when there is none within the budget.
std::vector<SemilinearConfigSet> minimal_separators(const Vass& vass, const Configuration& s,
                                                    const Configuration& t, std::size_t size_budget,
                                                    const SeparatorOptions& options = {});

struct DualSchedule {
  std::size_t max_run_length = 64;
  std::size_t max_separator_size = 4;
  Int run_norm_bound = 1000;
  SeparatorOptions separator;
  bool parallel = false;
  std::optional<std::chrono::milliseconds> tier_budget;
};

struct DualVerdict {
  enum class Kind { RunFound, SeparatorFound, Undecided };
  Kind kind = Kind::Undecided;
  std::optional<Run> run;
  std::optional<SemilinearConfigSet> separator;
  std::size_t run_levels = 0;       // run-length tiers completed
  std::size_t separator_sizes = 0;  // separator-size tiers completed
  std::vector<std::string> diagnostics;
};

const char* to_string(DualVerdict::Kind kind) noexcept;

/// Alternates one run-length tier with one separator-size tier and returns the
/// first success. Sequential unless schedule.parallel.
DualVerdict decide_dual(const Vass& vass, const Configuration& s, const Configuration& t,
                        const DualSchedule& schedule);

}  // namespace vsl
