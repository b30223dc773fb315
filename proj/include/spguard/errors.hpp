#pragma once

#include <stdexcept>
#include <string>

namespace spguard {

// Invalid user-supplied configuration (bad ranges, malformed files, unknown ids).
// CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken API precondition (shape mismatch, out-of-range step index, ...).
// These indicate a programming error in the caller, not bad user input.
struct ContractViolation : std::logic_error {
    explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

// Non-finite values or other numeric breakdown during sampling.
// CLI maps this to exit code 3.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Detector calibration could not separate the score distributions.
// CLI maps this to exit code 4.
struct CalibrationError : std::runtime_error {
    explicit CalibrationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace spguard
