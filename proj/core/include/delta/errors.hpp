#pragma once

#include <stdexcept>
#include <string>

namespace delta {

// Domain errors thrown by library operations. Search misses are not errors:
// operations that can come up empty return std::optional / a result struct
// carrying NotFoundWithinBound instead.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct MalformedTuple : Error {
    using Error::Error;
};
struct TooShort : Error {
    using Error::Error;
};
struct MalformedQuery : Error {
    using Error::Error;
};
struct MalformedInput : Error {
    using Error::Error;
};
struct PrecisionExhausted : Error {
    using Error::Error;
};
struct NotEnoughElements : Error {
    using Error::Error;
};
struct BoundExceeded : Error {
    using Error::Error;
};

}  // namespace delta
