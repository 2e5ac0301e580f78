#pragma once

#include <stdexcept>
#include <string>

namespace pacert {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed ribbon graph, bad pairing, non-transverse vertex, parse failure.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenusBoundError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PennerSignError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PrimitivityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
    ResourceError(const std::string& what, double attempted, double limit)
        : std::runtime_error(what), attempted(attempted), limit(limit) {}
    double attempted;
    double limit;
};

struct ProjectionUndefinedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace pacert
