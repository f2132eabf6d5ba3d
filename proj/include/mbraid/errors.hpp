#pragma once
#include <stdexcept>

namespace mbraid {

// Malformed input or configuration (CLI maps this to exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numeric procedure could not meet its contract: gap collapse, coarse
// quadrature, non-finite data, invalid regime (CLI exit code 3).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mbraid
