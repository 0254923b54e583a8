#pragma once

// Bounded-exact exploration: post*/pre* under a norm bound, shortest runs and
// run enumeration.

#include "vsl/core.hpp"
#include "vsl/relaxation.hpp"

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace vsl {

struct SearchBounds {
  Int norm_bound = 100;
  std::size_t length_bound = std::numeric_limits<std::size_t>::max();
  std::optional<std::size_t> node_budget;
  /// Target-directed searches discard configurations the state equation proves
  /// dead instead of counting them as pruned.
  bool prune_dead = true;
};

struct BoundedSet {
  std::vector<Configuration> configs;  // sorted
  bool pruned = false;

  bool contains(const Configuration& c) const;
};

BoundedSet post_bounded(const Vass& vass, const Configuration& c, const SearchBounds& bounds);
BoundedSet pre_bounded(const Vass& vass, const Configuration& c, const SearchBounds& bounds);

struct SearchStats {
  std::size_t explored = 0;
  std::size_t dead = 0;
  bool pruned = false;
};

struct ReachVerdict {
  enum class Kind { Reachable, NotReachableWithinBounds, Exhausted };
  Kind kind = Kind::NotReachableWithinBounds;
  std::optional<Run> witness;
  SearchStats stats;
};

const char* to_string(ReachVerdict::Kind kind) noexcept;

/// Breadth-first search; a Reachable witness is the shortest run and, among
/// those, the least transition sequence.
ReachVerdict shortest_run(const Vass& vass, const Configuration& s, const Configuration& t,
                          const SearchBounds& bounds);

/// Breadth-first search that can be advanced one length level at a time.
class LevelSearch {
 public:
  LevelSearch(const Vass& vass, Configuration s, Configuration t, SearchBounds bounds);

  /// Expands one more level. Returns true once the search has terminated
  /// (found, exhausted, or out of bounds).
  bool advance();
  bool done() const noexcept { return verdict_.has_value(); }
  const std::optional<ReachVerdict>& verdict() const noexcept { return verdict_; }
  std::size_t level() const noexcept { return level_; }

 private:
  struct Node {
    std::size_t parent;
    TransitionId trans;
    const Configuration* config;
  };
  Run build(std::size_t node) const;
  void finish(ReachVerdict::Kind kind, std::optional<std::size_t> node);

  const Vass* vass_;
  Configuration s_;
  Configuration t_;
  SearchBounds bounds_;
  std::unique_ptr<StateEquation> relax_;
  std::unordered_map<Configuration, std::size_t, ConfigurationHash> seen_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> frontier_;
  std::size_t level_ = 0;
  SearchStats stats_;
  std::optional<ReachVerdict> verdict_;
};

/// Every run from s with length <= length_bound whose configurations stay
/// within the norm bound, by nondecreasing length and then by transition
/// sequence. The empty run comes first.
class RunEnumerator {
 public:
  RunEnumerator(const Vass& vass, Configuration s, SearchBounds bounds);
  std::optional<Run> next();

 private:
  const Vass* vass_;
  SearchBounds bounds_;
  std::vector<Run> level_;
  std::size_t pos_ = 0;
  std::size_t length_ = 0;
};

std::vector<Run> enumerate_runs(const Vass& vass, const Configuration& s, const SearchBounds& bounds);

}  // namespace vsl
