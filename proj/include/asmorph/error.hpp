#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace asmorph {

enum class ErrorKind {
  NotPrime,
  NotOdd,
  InvalidParameters,
  CtxMismatch,
  DivisionByZero,
  ZeroElement,
  OrderNotAvailable,
  NotCoprime,
  ZeroCoefficient,
  GuardExceeded,
  BaseFieldMismatch,
  NotDivisible,
  NotOnSource,
  PreconditionViolated,
  InvalidS,
  InvalidR,
  // Invariant violations. Reaching one of these is either a bug or a
  // counterexample to a proven statement; the CLI maps them to exit code 3.
  InternalInconsistency,
  NormalFormNotFound,
  StructureMismatch,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  bool is_inconsistency() const noexcept {
    return kind_ == ErrorKind::InternalInconsistency ||
           kind_ == ErrorKind::NormalFormNotFound ||
           kind_ == ErrorKind::StructureMismatch;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void ensure(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace asmorph
