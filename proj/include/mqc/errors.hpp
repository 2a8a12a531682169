#pragma once

#include <stdexcept>

namespace mqc {

// Input that fails validation: malformed file, bad flag value, violated
// precondition of a public interface. CLI maps this to exit code 2.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construct that is well formed but outside what a compilation mode can
// express. CLI exit code 3.
struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A Monte Carlo estimate deviated beyond its acceptance band. CLI exit code 4.
struct StatCheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal invariant violation; indicates a bug, not bad input. CLI exit 5.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace mqc
