#pragma once

#include <stdexcept>
#include <string>

namespace vat {

/// Invalid configuration input: bad file syntax, unknown key, value out of range.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A statistical estimate cannot be formed (too few samples, zero variance, ...).
class EstimationError : public std::runtime_error {
public:
    explicit EstimationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace vat
