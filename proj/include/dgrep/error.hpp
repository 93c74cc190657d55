#pragma once

#include <stdexcept>
#include <string>

namespace dgrep {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different scalar fields (rational vs F_p, or two primes).
class FieldMismatch : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// Averaging over G needs 1/|G|; raised when char(K) divides |G|.
class HypothesisViolation : public Error {
public:
  using Error::Error;
};

/// Input object fails the axioms required by an operation's precondition.
class AxiomFailure : public Error {
public:
  using Error::Error;
};

/// Malformed or schema-violating input.
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace dgrep
