#pragma once

#include <stdexcept>
#include <string>

namespace pclab {

// Every failure mode the library reports is a named exception so callers and
// tests can distinguish "bad input file" from "your sieve is too short".
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// dataset/stream problems
struct ParseError : Error { using Error::Error; };
struct MalformedDataset : Error { using Error::Error; };

// request exceeds what the data can support
struct HeightExceeded : Error { using Error::Error; };
struct RangeExceeded : Error { using Error::Error; };
struct RangeViolation : Error { using Error::Error; };
struct ResourceLimit : Error { using Error::Error; };

// certified-accuracy failures: the bound we can prove is not small enough
struct InsufficientSieve : Error { using Error::Error; };
struct InsufficientHeight : Error { using Error::Error; };
struct QuadratureFailure : Error { using Error::Error; };

}  // namespace pclab
