#pragma once

#include <stdexcept>
#include <string>

namespace bdom {

enum class ErrorCode {
  InvalidArgument,
  InvalidVertex,
  UnreachableVertex,
  InvalidFamilyParameter,
  InvalidEdge,
  ParseError,
  BudgetExhausted,
};

// Every recoverable failure surfaces as an Error. code() selects the failure
// class; what() carries a message that names vertices by their 1-based labels.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace bdom
