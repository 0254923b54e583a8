#include "vsl/core.hpp"

#include <algorithm>

namespace vsl {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidVass: return "InvalidVass";
    case ErrorKind::WrongState: return "WrongState";
    case ErrorKind::NegativeCounter: return "NegativeCounter";
    case ErrorKind::UnknownState: return "UnknownState";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PrerequisiteViolated: return "PrerequisiteViolated";
    case ErrorKind::OverlappingSupports: return "OverlappingSupports";
    case ErrorKind::InvalidSchedule: return "InvalidSchedule";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
  }
  return "Unknown";
}

bool operator<(const Configuration& a, const Configuration& b) {
  if (a.state != b.state) {
    return index(a.state) < index(b.state);
  }
  return std::lexicographical_compare(a.vec.begin(), a.vec.end(), b.vec.begin(), b.vec.end());
}

std::size_t ConfigurationHash::operator()(const Configuration& c) const noexcept {
  return IntVecHash{}(c.vec) * 31 + index(c.state);
}

Vass::Vass(std::size_t dim) : dim_(dim) {
  if (dim == 0) {
    throw VslError(ErrorKind::InvalidVass, "dimension must be positive");
  }
}

StateId Vass::add_state(std::string name) {
  if (name.empty()) {
    throw VslError(ErrorKind::InvalidVass, "empty state name");
  }
  if (by_name_.contains(name)) {
    throw VslError(ErrorKind::InvalidVass, "duplicate state '" + name + "'");
  }
  const auto id = static_cast<StateId>(names_.size());
  by_name_.emplace(name, id);
  names_.push_back(std::move(name));
  outgoing_.emplace_back();
  incoming_.emplace_back();
  return id;
}

TransitionId Vass::add_transition(StateId src, IntVec effect, StateId dst) {
  if (index(src) >= names_.size() || index(dst) >= names_.size()) {
    throw VslError(ErrorKind::UnknownState, "transition endpoint out of range");
  }
  if (effect.size() != dim_) {
    throw VslError(ErrorKind::DimensionMismatch,
                   "effect of length " + std::to_string(effect.size()) + " in a " +
                       std::to_string(dim_) + "-VASS");
  }
  const TransitionId id = transitions_.size();
  transitions_.push_back(Transition{src, std::move(effect), dst});
  outgoing_[index(src)].push_back(id);
  incoming_[index(dst)].push_back(id);
  return id;
}

TransitionId Vass::add_transition(std::string_view src, IntVec effect, std::string_view dst) {
  return add_transition(state(src), std::move(effect), state(dst));
}

std::optional<StateId> Vass::find_state(std::string_view name) const {
  const auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) {
    return std::nullopt;
  }
  return it->second;
}

StateId Vass::state(std::string_view name) const {
  if (auto s = find_state(name)) {
    return *s;
  }
  throw VslError(ErrorKind::UnknownState, "no state named '" + std::string(name) + "'");
}

Configuration Vass::config(std::string_view state_name, IntVec vec) const {
  Configuration c{state(state_name), std::move(vec)};
  check(c);
  return c;
}

void Vass::check(const Configuration& c) const {
  if (index(c.state) >= names_.size()) {
    throw VslError(ErrorKind::UnknownState, "configuration state out of range");
  }
  if (c.vec.size() != dim_) {
    throw VslError(ErrorKind::DimensionMismatch, "configuration of length " +
                                                     std::to_string(c.vec.size()) + " in a " +
                                                     std::to_string(dim_) + "-VASS");
  }
  if (!is_nonneg(c.vec)) {
    throw VslError(ErrorKind::NegativeCounter, "configuration has a negative counter");
  }
}

FireResult fire(const Vass& vass, const Configuration& c, TransitionId t) {
  const Transition& tr = vass.transition(t);
  if (tr.src != c.state) {
    return FireError{ErrorKind::WrongState, 0};
  }
  Configuration out{tr.dst, IntVec(c.vec.size())};
  for (std::size_t i = 0; i < c.vec.size(); ++i) {
    out.vec[i] = c.vec[i] + tr.effect[i];
    if (out.vec[i] < 0) {
      return FireError{ErrorKind::NegativeCounter, i};
    }
  }
  return out;
}

bool try_fire(const Vass& vass, const Configuration& c, TransitionId t, Configuration& out) {
  const Transition& tr = vass.transition(t);
  if (tr.src != c.state) {
    return false;
  }
  const std::size_t d = c.vec.size();
  for (std::size_t i = 0; i < d; ++i) {
    if (tr.effect[i] < 0 && c.vec[i] < -tr.effect[i]) {
      return false;
    }
  }
  out.state = tr.dst;
  out.vec.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    out.vec[i] = c.vec[i] + tr.effect[i];
  }
  return true;
}

bool try_fire_backward(const Vass& vass, const Configuration& c, TransitionId t,
                       Configuration& out) {
  const Transition& tr = vass.transition(t);
  if (tr.dst != c.state) {
    return false;
  }
  const std::size_t d = c.vec.size();
  for (std::size_t i = 0; i < d; ++i) {
    if (tr.effect[i] > 0 && c.vec[i] < tr.effect[i]) {
      return false;
    }
  }
  out.state = tr.src;
  out.vec.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    out.vec[i] = c.vec[i] - tr.effect[i];
  }
  return true;
}

Run::Run(Configuration source) { configs_.push_back(std::move(source)); }

Run Run::replay(const Vass& vass, Configuration source, std::span<const TransitionId> path) {
  vass.check(source);
  Run run(std::move(source));
  run.configs_.reserve(path.size() + 1);
  run.transitions_.reserve(path.size());
  for (TransitionId t : path) {
    run.push(vass, t);
  }
  return run;
}

void Run::push(const Vass& vass, TransitionId t) {
  if (t >= vass.num_transitions()) {
    throw VslError(ErrorKind::InvalidVass, "transition index " + std::to_string(t) + " out of range");
  }
  FireResult r = fire(vass, configs_.back(), t);
  if (auto* err = std::get_if<FireError>(&r)) {
    throw VslError(err->kind, "step " + std::to_string(transitions_.size()) + " (transition " +
                                  std::to_string(t) + ") cannot fire");
  }
  configs_.push_back(std::move(std::get<Configuration>(r)));
  transitions_.push_back(t);
}

AnchoredTransition Run::step(std::size_t i) const {
  return AnchoredTransition{configs_.at(i), transitions_.at(i), configs_.at(i + 1)};
}

std::vector<AnchoredTransition> Run::steps() const {
  std::vector<AnchoredTransition> out;
  out.reserve(length());
  for (std::size_t i = 0; i < length(); ++i) {
    out.push_back(step(i));
  }
  return out;
}

IntVec run_effect(const Vass& vass, const Run& run) {
  IntVec sum = zero_vec(vass.dim());
  for (TransitionId t : run.transitions()) {
    const IntVec& e = vass.transition(t).effect;
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum[i] += e[i];
    }
  }
  return sum;
}

namespace {

std::optional<std::string> check_config(const Vass& vass, const Configuration& c) {
  if (index(c.state) >= vass.num_states()) {
    return "unknown state";
  }
  if (c.vec.size() != vass.dim()) {
    return "wrong dimension";
  }
  if (!is_nonneg(c.vec)) {
    return "negative counter";
  }
  return std::nullopt;
}

}  // namespace

std::optional<RunViolation> validate_run(const Vass& vass,
                                         std::span<const AnchoredTransition> steps) {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const AnchoredTransition& m = steps[i];
    if (m.trans >= vass.num_transitions()) {
      return RunViolation{i, "transition index out of range"};
    }
    if (auto why = check_config(vass, m.src)) {
      return RunViolation{i, "source " + *why};
    }
    if (auto why = check_config(vass, m.trg)) {
      return RunViolation{i, "target " + *why};
    }
    const Transition& tr = vass.transition(m.trans);
    if (m.src.state != tr.src || m.trg.state != tr.dst) {
      return RunViolation{i, "state does not match transition endpoints"};
    }
    for (std::size_t j = 0; j < vass.dim(); ++j) {
      if (m.trg.vec[j] != m.src.vec[j] + tr.effect[j]) {
        return RunViolation{i, "target differs from source plus effect"};
      }
    }
    if (i > 0 && !(steps[i - 1].trg == m.src)) {
      return RunViolation{i, "does not chain with the previous step"};
    }
  }
  return std::nullopt;
}

std::optional<RunViolation> validate_run(const Vass& vass, const Run& run) {
  if (auto why = check_config(vass, run.source())) {
    return RunViolation{0, "source " + *why};
  }
  const auto steps = run.steps();
  return validate_run(vass, std::span<const AnchoredTransition>(steps));
}

}  // namespace vsl
