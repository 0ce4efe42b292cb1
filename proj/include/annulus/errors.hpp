#pragma once

#include <stdexcept>
#include <string>

namespace annulus {

// Invalid numeric parameter (radius ordering, out-of-range argument, ...).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Mismatched or invalid spatial dimension.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Operation applied to an instance of the wrong model family.
struct ModelError : std::invalid_argument {
    explicit ModelError(const std::string& what) : std::invalid_argument(what) {}
};

// Contradictory same/different constraints during location-aware recovery.
struct InconsistencyError : std::runtime_error {
    explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed file or config content.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace annulus
