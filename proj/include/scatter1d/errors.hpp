#ifndef SCATTER1D_ERRORS_HPP
#define SCATTER1D_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scatter1d {

// Malformed or inconsistent run configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Failure inside a solver or quadrature routine (CLI exit code 3).
// Messages name the originating module and the offending parameters.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace scatter1d

#endif
