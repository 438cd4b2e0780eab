#pragma once

#include <stdexcept>
#include <string>

namespace hadforge {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatch : Error {
    using Error::Error;
};
struct RangeOverflow : Error {
    using Error::Error;
};
struct ShapeError : Error {
    using Error::Error;
};
struct SupportMismatch : Error {
    using Error::Error;
};
struct NotNormal : Error {
    using Error::Error;
};
struct NotNearNormal : Error {
    using Error::Error;
};
struct InvalidBS : Error {
    using Error::Error;
};
struct InvalidTS : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};
struct InvalidInput : Error {
    using Error::Error;
};
// A construction produced output that fails its own validating predicate.
// Always surfaced, never patched over.
struct PostconditionFailure : Error {
    using Error::Error;
};
struct MalformedCode : Error {
    using Error::Error;
};
struct InvalidQuadLabel : Error {
    using Error::Error;
};
struct MalformedHex : Error {
    using Error::Error;
};
struct CorruptData : Error {
    using Error::Error;
};
struct NotHadamard : Error {
    using Error::Error;
};
struct AcceptanceFailure : Error {
    using Error::Error;
};

} // namespace hadforge
