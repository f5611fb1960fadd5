#pragma once

#include <stdexcept>
#include <string>

namespace llv {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (vector length vs. Gram size, non-square matrix, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (isotropic input, non-isometry, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text: rationals, lattice expressions, scenario files, reports.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace llv
