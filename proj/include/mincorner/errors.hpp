#pragma once

#include <stdexcept>
#include <string>

namespace mincorner {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (grid files, formulas, embeddings, LP text).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An enumeration or table would exceed a configured cap. The instance is not
// wrong, it is just too large for this solver configuration.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed (a solver produced an invalid witness,
// a constructed gadget does not have its certified properties, ...).
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace mincorner
