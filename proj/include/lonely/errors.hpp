#pragma once

#include <stdexcept>
#include <string>

namespace lonely {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct OverflowError : Error {
    using Error::Error;
};

struct InconsistentOracle : Error {
    using Error::Error;
};

struct NonPrimitive : Error {
    using Error::Error;
};

struct NotCanonical : Error {
    using Error::Error;
};

struct Diverged : Error {
    using Error::Error;
};

struct RankDeficient : Error {
    using Error::Error;
};

struct UnknownLabel : Error {
    using Error::Error;
};

struct NotColoopless : Error {
    using Error::Error;
};

struct BoundTooLarge : Error {
    using Error::Error;
};

struct Unbounded : Error {
    using Error::Error;
};

struct NotSorted : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

}  // namespace lonely
