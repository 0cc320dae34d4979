#pragma once

#include <stdexcept>
#include <string>

namespace krylov {

/// Input is formally valid but numerically degenerate (zero seed, vanishing
/// trace norm, too few samples).
struct degenerate_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An iterative numerical routine failed to converge.
struct numerical_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Request exceeds the dense-feasibility limits of this toolkit.
struct resource_limit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Experiment configuration names an invalid parameter combination.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Filesystem problem while reading configs or writing results.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed command line or unknown preset.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace krylov
