#pragma once

#include <stdexcept>

namespace pcw {

// Malformed input or a violated call precondition. CLI maps this to exit 2.
using InputError = std::invalid_argument;

// A computation refused because it would exceed a configured size guard.
// CLI maps this to exit 1.
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pcw
