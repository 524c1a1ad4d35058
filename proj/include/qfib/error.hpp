#pragma once

#include <stdexcept>
#include <string>

namespace qfib {

// Malformed input (bad syntax, zero polynomial where forbidden). CLI exit code 2.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input violating an operation's precondition. CLI exit code 3.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAdmissible : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DegeneratePencil : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ZeroDivisor : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DivisionByZeroDenominator : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// An internal invariant failed; indicates an arithmetic bug. CLI exit code 4.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InternalError(what);
}

}  // namespace qfib
