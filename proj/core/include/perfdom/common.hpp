#pragma once

#include <stdexcept>
#include <string>

namespace perfdom {

// Malformed input: bad dimensions, out-of-board squares, unparsable files,
// conflicting constraints. CLI maps this to exit code 1.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A request that exceeds a built-in resource guard (board too large for the
// oracle, too many rows for the profile DP, ...). CLI maps this to exit code 2.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace perfdom
