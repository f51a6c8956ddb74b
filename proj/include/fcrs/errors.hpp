#pragma once

#include <stdexcept>
#include <string>

namespace fcrs {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments: out-of-range parameters, malformed addresses or schedules.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Parameters are valid but the hypercube does not fit the GF(2^16) code length.
class UnsupportedScaleError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Stored data is inconsistent (digest mismatch, non-codeword surplus symbols).
class CorruptionError : public Error {
 public:
  using Error::Error;
};

/// Requested repair bandwidth is below the minimum feasible value.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// A flow graph admits unbounded flow; indicates a graph construction bug.
class StructuralError : public Error {
 public:
  using Error::Error;
};

}  // namespace fcrs
