#pragma once

#include <stdexcept>
#include <string>

namespace commkit {

/// Caller supplied an invalid argument: out-of-range id, malformed input,
/// violated precondition. Maps to CLI exit code 1.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A random generator could not produce a valid output within its budget.
class GenerationError : public std::runtime_error {
public:
    explicit GenerationError(const std::string& what, double best_value = 0.0)
        : std::runtime_error(what), best_value_(best_value) {}

    /// Best achieved value of the controlled quantity (e.g. realized mixing).
    double best_value() const noexcept { return best_value_; }

private:
    double best_value_;
};

/// A community detector failed (numerical non-convergence, timeout).
class DetectorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The per-detector wall-clock budget was exhausted.
class DetectorTimeout : public DetectorError {
public:
    using DetectorError::DetectorError;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace commkit
