#pragma once

#include <stdexcept>
#include <string>

namespace pinwheel {

// Violation of a documented precondition or configuration contract.
// The CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency failure (self-adjointness, variance sign, ...).
// Reaching one of these is a bug, not bad input.
class NumericError : public std::logic_error {
 public:
  explicit NumericError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pinwheel
