#pragma once

#include <stdexcept>
#include <string>

namespace inflate {

// Bad input: inconsistent scenario, lattice mismatch, unknown case id.
// The CLI maps this to exit code 1.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric guard tripped: term-cap overflow, series divergence, enumeration
// too large, solver blow-up.  The CLI maps this to exit code 2.
struct NumericGuard : std::runtime_error {
  explicit NumericGuard(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace inflate
