#pragma once

#include <stdexcept>
#include <string>

namespace fontfactor {

// Caller handed us a bad value: out-of-range probability, empty input set,
// index past the end, and so on.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A file or byte stream is not what it claims to be: wrong magic, truncated
// payload, mismatched dimensions on load.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite values where finite math is required, including training
// divergence.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fontfactor
