#pragma once

// Linear and state-tagged semilinear sets: membership, size, enumeration and
// invariance under the transitions of a VASS.

#include "vsl/core.hpp"
#include "vsl/numtheory.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace vsl {

/// b + N p_1 + ... + N p_k. Zero periods are dropped on construction; period
/// order is otherwise kept until canonical() is called.
class LinearSet {
 public:
  LinearSet(IntVec base, std::vector<IntVec> periods = {});

  const IntVec& base() const noexcept { return base_; }
  const std::vector<IntVec>& periods() const noexcept { return periods_; }
  std::size_t dim() const noexcept { return base_.size(); }
  Int size() const;

  /// Periods sorted lexicographically with duplicates removed.
  LinearSet canonical() const;

  friend bool operator==(const LinearSet&, const LinearSet&) = default;
  friend std::strong_ordering operator<=>(const LinearSet& a, const LinearSet& b);

 private:
  IntVec base_;
  std::vector<IntVec> periods_;
};

struct Component {
  StateId state{};
  LinearSet set;

  friend bool operator==(const Component&, const Component&) = default;
};

class SemilinearConfigSet {
 public:
  explicit SemilinearConfigSet(std::size_t dim, std::vector<Component> components = {});

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Component>& components() const noexcept { return components_; }
  bool empty() const noexcept { return components_.empty(); }
  void add(StateId state, LinearSet set);
  Int size() const;

  /// Every component canonical, components sorted by (state, set), duplicates dropped.
  SemilinearConfigSet canonical() const;

  friend bool operator==(const SemilinearConfigSet&, const SemilinearConfigSet&) = default;

 private:
  std::size_t dim_;
  std::vector<Component> components_;
};

/// Coefficients n with base + sum n_i p_i = v, or nullopt.
std::optional<std::vector<Int>> member(const IntVec& v, const LinearSet& set);
bool member_config(const Configuration& c, const SemilinearConfigSet& set);

/// inner is contained in outer: inner's base is in outer and each period of
/// inner lies in the period monoid of outer. Sufficient, not necessary.
bool subsumes(const LinearSet& outer, const LinearSet& inner);

/// All points of the set with norm <= bound, sorted lexicographically.
std::vector<IntVec> points_within(const LinearSet& set, const Int& bound);

struct PeriodRef {
  std::size_t component = 0;
  std::size_t period = 0;
  Rational ratio;  // period = ratio * delta; unset (0) for ratio queries
};

/// Periods equal to r * delta for a positive rational r.
std::vector<PeriodRef> proportional_periods(const SemilinearConfigSet& set, const IntVec& delta);

/// Periods p with lin1(p) = r * lin2(p) and p nonzero on supp(lin1) u supp(lin2).
std::vector<PeriodRef> ratio_satisfying_periods(const SemilinearConfigSet& set,
                                                const LinearFunction& lin1,
                                                const LinearFunction& lin2, const Rational& r);

struct InvarianceOptions {
  Int box = 20;                    // refutation tier explores points of norm <= box
  std::size_t split_depth = 6;     // recursion depth of the covering tier
  std::size_t max_pieces = 4096;   // image pieces per (component, transition)
};

struct InvarianceVerdict {
  enum class Kind { Verified, Refuted, Unknown };
  Kind kind = Kind::Unknown;
  // witness for Refuted: from --transition--> to, with to outside the set
  std::optional<Configuration> from;
  TransitionId transition = 0;
  std::optional<Configuration> to;
  std::string note;
};

/// Refutation tier: every point of norm <= box and every fireable transition
/// must stay inside. Verification tier: the image of each component under each
/// outgoing transition is split into linear pieces, each covered by a
/// component at the destination. Verified is sound; Refuted carries a
/// witness; otherwise Unknown.
InvarianceVerdict check_invariance(const Vass& vass, const SemilinearConfigSet& set,
                                   const InvarianceOptions& options = {});

/// Only the refutation tier.
std::optional<InvarianceVerdict> refute_invariance(const Vass& vass, const SemilinearConfigSet& set,
                                                   const Int& box);
/// Only the verification tier.
bool verify_invariance(const Vass& vass, const SemilinearConfigSet& set,
                       const InvarianceOptions& options = {});

/// Canonical linear sets of dimension dim with size <= budget, ordered by
/// (size, base, periods).
std::vector<LinearSet> linear_sets_up_to(std::size_t dim, std::size_t budget);

/// Streams every semilinear set over the given states with size <= budget in
/// nondecreasing size, starting with the empty set. Components within a set are
/// distinct and listed in a fixed canonical order, so each representation
/// appears once.
class SemilinearEnumerator {
 public:
  SemilinearEnumerator(std::vector<StateId> states, std::size_t dim, std::size_t budget);

  std::optional<SemilinearConfigSet> next();

 private:
  void fill_tier();

  std::vector<StateId> states_;
  std::size_t dim_;
  std::size_t budget_;
  std::vector<Component> pool_;
  std::vector<std::size_t> pool_size_;
  std::size_t tier_ = 0;
  bool tier_filled_ = false;
  std::vector<SemilinearConfigSet> pending_;
  std::size_t pos_ = 0;
};

}  // namespace vsl
