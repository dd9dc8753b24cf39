#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ewh {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic or conversion between quantities of incompatible dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A model input outside its admissible range (negative flow, beta > 1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Configuration rejected during validation. Carries every issue found in a
/// single pass so the user can fix them all at once.
class ConfigError : public Error {
public:
    explicit ConfigError(std::vector<std::string> issues);

    const std::vector<std::string>& issues() const noexcept { return issues_; }

private:
    std::vector<std::string> issues_;
};

/// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace ewh
