// Error taxonomy shared by all modules.
//
// ConfigError   -> bad configuration or dimension mismatch (CLI exit code 2)
// NumericalError-> numerical failure such as Riccati non-convergence (exit 3)
// InputError    -> out-of-domain argument at an API boundary (exit 2)
#pragma once

#include <stdexcept>
#include <string>

namespace wams {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Fewer than two satellites visible at an epoch, or a sample set too
/// small to fit. The caller decides whether to skip or abort.
class InsufficientDataError : public std::runtime_error {
public:
    explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wams
