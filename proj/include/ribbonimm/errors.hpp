#pragma once

#include <stdexcept>
#include <string>

namespace ril {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input (bad partition, out-of-range index, size mismatch).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A copy of the ribbon meets the skew shape in a non-contiguous set of cells.
class IncompatibleShape : public Error {
 public:
  using Error::Error;
};

/// The copies met by a skew shape do not form a consecutive range.
class NonConsecutiveCopies : public Error {
 public:
  using Error::Error;
};

/// Sections placed in consecutive copies do not form a skew diagram.
class NotSkew : public Error {
 public:
  using Error::Error;
};

/// Enumeration would exceed the configured budget (see RIL_BUDGET).
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant that must hold failed; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Strands drawn on a shuffle tableau do not form node-to-node paths.
class StrandTraceError : public InternalError {
 public:
  using InternalError::InternalError;
};

/// A crystal operator produced a filling that is not a shuffle tableau.
class ValidityError : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace ril
