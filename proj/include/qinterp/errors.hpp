#pragma once

#include <stdexcept>
#include <string>

namespace qinterp {

enum class ErrorKind {
  NotInvertible,
  NotAutomorphism,
  NotEmbedding,
  NotEpimorphism,
  NotBump,
  NotCofinal,
  NotConjugate,
  NotRepresentable,
  PinInconsistent,
  ActionMismatch,
  IterationBudgetExceeded,
  BudgetExceeded,
  NormalizationFailed,
  PreconditionViolated,
  SyntaxError,
  DomainError,
  Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace qinterp
