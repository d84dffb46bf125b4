#pragma once

#include <stdexcept>
#include <string>

namespace lgh {

// Base for every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad index, dimension or parameter.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Evaluation outside the domain of a function, e.g. at a pole of a quotient.
// `where` names the offending expression node.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, std::string where)
      : Error(what + " [at " + where + "]"), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

// Input data violates a mathematical precondition (non-isotropic vectors, proportional P and Q).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Null direction met while orthonormalising against an indefinite form.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// Operation not defined for this kind of input (non-holomorphic continuation, unsupported group).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A prerequisite verification did not pass.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// No usable samples: every candidate point fell below the quotient domain floor.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

// A constructed object failed one of its structural invariants.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace lgh
