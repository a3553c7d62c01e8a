#pragma once

#include <stdexcept>
#include <string>

namespace equik {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured size guard (group order, Clifford dimension, lambda degree) was exceeded.
struct size_limit : error {
    using error::error;
};

struct dimension_mismatch : error {
    using error::error;
};

/// restrict() was asked for a subspace the matrix does not preserve.
struct not_invariant : error {
    using error::error;
};

struct not_commuting : error {
    using error::error;
};

/// A structure constant that must be an integer came out fractional.
struct non_integral : error {
    using error::error;
};

struct invalid_basis : error {
    using error::error;
};

/// Malformed user input (group files, partition strings, CLI values).
struct parse_error : error {
    using error::error;
};

} // namespace equik
