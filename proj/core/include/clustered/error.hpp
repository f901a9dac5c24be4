#pragma once

#include <stdexcept>
#include <string>

namespace clustered {

/// Malformed input: out-of-range vertices, self-loops, invalid specs.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size limit or enumeration budget would be exceeded.
/// Raised before the expensive work starts whenever the cost is predictable.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A randomized generator ran out of attempts.
class GenerationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace clustered
