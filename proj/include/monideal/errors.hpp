#pragma once

#include <stdexcept>
#include <string>

namespace monideal {

/// Exponent vectors of different lengths were combined.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter is outside the range an operation or family accepts.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input ideal does not satisfy an operation's precondition
/// (e.g. socle degree of a non-Artinian ideal).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exponent arithmetic left the int64 range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A brute-force computation would exceed its configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No closed formula is known for the requested family.
class UnsupportedFamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two sources for the same value disagree.
class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace monideal
