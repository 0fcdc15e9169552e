#pragma once

#include <stdexcept>
#include <string>

namespace dycktile {

/// Input failed a structural check (malformed word, unbalanced set, ...).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured size cap would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dycktile
