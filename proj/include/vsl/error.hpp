#pragma once

#include <stdexcept>
#include <string>

namespace vsl {

enum class ErrorKind {
  Parse,
  InvalidVass,
  WrongState,
  NegativeCounter,
  UnknownState,
  DimensionMismatch,
  PrerequisiteViolated,
  OverlappingSupports,
  InvalidSchedule,
  BudgetExhausted,
};

const char* to_string(ErrorKind kind) noexcept;

class VslError : public std::runtime_error {
 public:
  VslError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace vsl
