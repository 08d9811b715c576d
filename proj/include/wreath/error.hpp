#pragma once

#include <stdexcept>
#include <string>

namespace wreath {

enum class ErrorKind {
  ZeroEvaluationPoint,
  WrongGrading,
  NegativeCoefficient,
  ZeroDenominator,
  BadIndex,
  NoRadical,
  NotEulerian,
  NotRadical,
  PreconditionViolated,
  BadDenominator,
  ZeroPolynomial,
  InvalidInput,
  LimitExceeded,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wreath
