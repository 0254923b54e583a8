#pragma once

// VASS data model: states, integer-vector transitions, configurations, runs.

#include "vsl/bigint.hpp"
#include "vsl/error.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace vsl {

enum class StateId : std::uint32_t {};

constexpr std::size_t index(StateId s) noexcept { return static_cast<std::size_t>(s); }

using TransitionId = std::size_t;

struct Transition {
  StateId src;
  IntVec effect;
  StateId dst;
};

struct Configuration {
  StateId state{};
  IntVec vec;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Orders by state index, then lexicographically by counter values.
bool operator<(const Configuration& a, const Configuration& b);

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const noexcept;
};

/// A d-dimensional vector addition system with states. States are interned
/// names with stable indices; transitions form an indexed list so that runs can
/// refer to them by position.
class Vass {
 public:
  explicit Vass(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_states() const noexcept { return names_.size(); }
  std::size_t num_transitions() const noexcept { return transitions_.size(); }

  StateId add_state(std::string name);
  TransitionId add_transition(StateId src, IntVec effect, StateId dst);
  TransitionId add_transition(std::string_view src, IntVec effect, std::string_view dst);

  const std::string& state_name(StateId s) const { return names_.at(index(s)); }
  std::optional<StateId> find_state(std::string_view name) const;
  /// Throws UnknownState.
  StateId state(std::string_view name) const;

  const Transition& transition(TransitionId t) const { return transitions_.at(t); }
  std::span<const Transition> transitions() const noexcept { return transitions_; }
  const std::vector<TransitionId>& outgoing(StateId s) const { return outgoing_.at(index(s)); }
  const std::vector<TransitionId>& incoming(StateId s) const { return incoming_.at(index(s)); }

  /// Builds a configuration, checking the state name, dimension and signs.
  Configuration config(std::string_view state, IntVec vec) const;
  /// Throws unless c has a known state and a nonnegative vector of length dim().
  void check(const Configuration& c) const;

 private:
  std::size_t dim_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, StateId> by_name_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<TransitionId>> outgoing_;
  std::vector<std::vector<TransitionId>> incoming_;
};

struct FireError {
  ErrorKind kind;               // WrongState or NegativeCounter
  std::size_t coordinate = 0;   // meaningful for NegativeCounter
};

using FireResult = std::variant<Configuration, FireError>;

FireResult fire(const Vass& vass, const Configuration& c, TransitionId t);

/// In-place forward step; returns false (leaving out unspecified) when t cannot fire.
bool try_fire(const Vass& vass, const Configuration& c, TransitionId t, Configuration& out);
/// In-place backward step: out fires t and lands on c.
bool try_fire_backward(const Vass& vass, const Configuration& c, TransitionId t,
                       Configuration& out);

struct AnchoredTransition {
  Configuration src;
  TransitionId trans;
  Configuration trg;
};

/// A run: a source configuration followed by a chain of fired transitions. The
/// empty run (length 0) from c is allowed and witnesses c -> c.
class Run {
 public:
  explicit Run(Configuration source);

  /// Fires the transitions in order from source; throws NegativeCounter or
  /// WrongState at the first step that cannot fire.
  static Run replay(const Vass& vass, Configuration source, std::span<const TransitionId> path);

  void push(const Vass& vass, TransitionId t);

  std::size_t length() const noexcept { return transitions_.size(); }
  bool empty() const noexcept { return transitions_.empty(); }
  const Configuration& source() const noexcept { return configs_.front(); }
  const Configuration& target() const noexcept { return configs_.back(); }
  /// i-th configuration, 0 <= i <= length().
  const Configuration& config(std::size_t i) const { return configs_.at(i); }
  const std::vector<Configuration>& configs() const noexcept { return configs_; }
  TransitionId transition(std::size_t i) const { return transitions_.at(i); }
  const std::vector<TransitionId>& transitions() const noexcept { return transitions_; }

  AnchoredTransition step(std::size_t i) const;
  std::vector<AnchoredTransition> steps() const;

  friend bool operator==(const Run&, const Run&) = default;

 private:
  std::vector<Configuration> configs_;
  std::vector<TransitionId> transitions_;
};

IntVec run_effect(const Vass& vass, const Run& run);

struct RunViolation {
  std::size_t index;
  std::string reason;
};

/// Checks every anchored transition (state endpoints, effect arithmetic,
/// nonnegativity) and the chaining between consecutive steps. Returns the first
/// violation, or nullopt when the step list is a valid run.
std::optional<RunViolation> validate_run(const Vass& vass, std::span<const AnchoredTransition> steps);
std::optional<RunViolation> validate_run(const Vass& vass, const Run& run);

}  // namespace vsl
