#pragma once

#include <stdexcept>
#include <string>

namespace zkec {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched or malformed parameters (field/ring mismatch, bad sizes).
class ParameterError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Malformed byte input: wrong length, nonzero pad bits, unknown tag.
class DecodeError : public Error {
 public:
  using Error::Error;
};

/// A point that does not satisfy the curve equation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A protocol step invoked out of sequence or after the session ended.
class ProtocolOrderError : public Error {
 public:
  using Error::Error;
};

/// Witness does not match the public statement.
class InvalidWitness : public Error {
 public:
  using Error::Error;
};

/// Retries exhausted or reassembly could not complete. Distinct from a
/// verifier rejecting a proof.
class TransportError : public Error {
 public:
  using Error::Error;
};

}  // namespace zkec
