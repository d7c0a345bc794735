#pragma once

#include <stdexcept>
#include <string>

namespace thinsieve {

// Exit-code families shared by the C API and the CLI.
enum class ErrorCode {
  Validation = 2,  // bad input, violated precondition, schema error
  Budget = 3,      // node budget / numeric instability
  Numeric = 4,
  Io = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct ValidationError : Error {
  explicit ValidationError(std::string msg)
      : Error(ErrorCode::Validation, std::move(msg)) {}
};
struct BudgetExceeded : Error {
  explicit BudgetExceeded(std::string msg)
      : Error(ErrorCode::Budget, std::move(msg)) {}
};
struct NumericError : Error {
  explicit NumericError(std::string msg)
      : Error(ErrorCode::Numeric, std::move(msg)) {}
};
struct IoError : Error {
  explicit IoError(std::string msg) : Error(ErrorCode::Io, std::move(msg)) {}
};

}  // namespace thinsieve
