#pragma once

// State-equation relaxation of reachability: c ->* t requires a transition
// multiset x with c + sum x_t effect(t) = t and Kirchhoff flow balance. If no
// such x exists over N (checked as: integer solution, and rational solution
// with x >= 0) then c cannot reach t.

#include "vsl/core.hpp"

#include <vector>

namespace vsl {

class StateEquation {
 public:
  /// target reached forwards (or, with backward = true, the equation for
  /// reaching target from the query configuration is replaced by the equation
  /// for the query being reachable from target).
  StateEquation(const Vass& vass, Configuration target, bool backward = false);

  /// True when the relaxation proves c cannot reach the target (backward:
  /// the target cannot reach c).
  bool dead(const Configuration& c) const;

  bool integer_feasible(const Configuration& c) const;
  bool rational_feasible(const Configuration& c) const;

 private:
  std::vector<Int> rhs(const Configuration& c) const;

  const Vass* vass_;
  Configuration target_;
  bool backward_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Int>> a_;        // rows_ x cols_
  std::vector<std::vector<Int>> echelon_;  // column echelon form of a_
  std::vector<long> pivot_col_;            // per row, -1 when the row has no pivot
};

}  // namespace vsl
