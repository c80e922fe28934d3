#pragma once

#include <stdexcept>
#include <string>

namespace gaugeball {

/// Malformed or inconsistent input (bad rational string, length mismatch, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was called outside its documented precondition.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// The operation is only implemented for small ambient dimensions.
class UnsupportedDimension : public std::domain_error {
 public:
  explicit UnsupportedDimension(const std::string& what) : std::domain_error(what) {}
};

}  // namespace gaugeball
