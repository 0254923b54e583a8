#pragma once

// Linear functions over counters, nonnegative Bezout decompositions and
// value-preserving step paths.

#include "vsl/bigint.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace vsl {

/// Lin(x) = sum_i n_i x_i with nonnegative coefficients, at least one nonzero.
/// Coordinates with n_i = 0 lie outside the support.
class LinearFunction {
 public:
  explicit LinearFunction(IntVec coeffs);

  const IntVec& coeffs() const noexcept { return coeffs_; }
  std::size_t dim() const noexcept { return coeffs_.size(); }
  const Int& coeff(std::size_t i) const { return coeffs_.at(i); }
  const std::vector<std::size_t>& support() const noexcept { return support_; }
  bool in_support(std::size_t i) const { return coeffs_.at(i) != 0; }
  const Int& max_coeff() const noexcept { return max_; }
  /// gcd of the nonzero coefficients is 1; recomputed on construction.
  bool is_reduced() const noexcept { return reduced_; }

  /// Evaluates on any integer vector (signed entries allowed).
  Int operator()(const IntVec& x) const;

  friend bool operator==(const LinearFunction& a, const LinearFunction& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  IntVec coeffs_;
  std::vector<std::size_t> support_;
  Int max_;
  bool reduced_ = false;
};

/// gcd of all entries; gcd of an all-zero list is 0.
Int gcd_list(std::span<const Int> values);

/// The reduced function and the multiplier m with lin = m * reduced.
std::pair<LinearFunction, Int> reduce(const LinearFunction& lin);

/// Nonnegative b with sum a_i b_i = target, or nullopt when none exists.
///
/// At or above k(M^2 - M) (k = a.size(), M = max a_i) with gcd(a) | target a
/// solution is guaranteed; it is built from an extended-gcd integer solution by
/// repeatedly moving weight from a coefficient b_j >= M onto a negative b_i
/// (b_j -= a_i, b_i += a_j). Below the threshold existence is decided exactly by
/// dynamic programming over the partial sums.
std::optional<std::vector<Int>> bezout_nonneg(std::span<const Int> a, const Int& target);

/// All vectors n_j e_i - n_i e_j over ordered pairs i != j of the support.
std::vector<IntVec> zero_set(const LinearFunction& lin);

enum class PathRoute {
  Trivial,       // u == v
  Induction,     // coordinate elimination with Bezout equalisation
  ResidueWalk,   // hub normal form plus residue correction
  Search,        // exhaustive breadth-first search on the level set
};

struct StepPath {
  std::vector<IntVec> points;
  PathRoute route = PathRoute::Trivial;
  /// Coordinates fixed by the induction, in the order they were fixed.
  std::vector<std::size_t> elimination_order;

  std::size_t length() const noexcept { return points.empty() ? 0 : points.size() - 1; }
  std::vector<IntVec> steps() const;
};

struct ZeroPathOptions {
  std::size_t search_node_limit = 2'000'000;
};

/// A path from u to v whose steps all lie in zero_set(lin) and whose points are
/// nonnegative.
///
/// Requires lin reduced, lin(u) == lin(v), and u, v equal outside the support
/// (PrerequisiteViolated otherwise). When lin(u) >= |supp| * M^3 a path always
/// exists and is constructed; below that threshold the (finite) level set is
/// searched exhaustively and nullopt means no path exists. Throws
/// BudgetExhausted if that search exceeds options.search_node_limit.
std::optional<StepPath> zero_run_path(const LinearFunction& lin, const IntVec& u, const IntVec& v,
                                      const ZeroPathOptions& options = {});

}  // namespace vsl
