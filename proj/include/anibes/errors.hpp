#pragma once

#include <stdexcept>
#include <string>

namespace anibes {

/// Invalid configuration (bad parameters, inadmissible spaces, malformed
/// config files). CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A constructed artifact failed its verification contract (e.g. measured
/// network sup-error above tolerance). CLI exit code 2.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure (singular systems, ill-conditioned Gram matrices,
/// degenerate fits). CLI exit code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace anibes
