#pragma once

#include <stdexcept>
#include <string>

namespace diskmcg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A letter index outside {1..n}, or other structurally invalid word input.
struct MalformedWordError : Error {
    using Error::Error;
};

// Two values over different alphabets / surfaces were combined.
struct SizeMismatchError : Error {
    using Error::Error;
};

// Generator or position index out of range.
struct IndexError : Error {
    using Error::Error;
};

// Invalid parameters for a monodromy family constructor.
struct ParameterError : Error {
    using Error::Error;
};

// Enumeration candidate count exceeded the configured ceiling.
struct ResourceLimitError : Error {
    long long candidates_planned = 0;
    long long ceiling = 0;
    ResourceLimitError(const std::string& msg, long long planned, long long lim)
        : Error(msg), candidates_planned(planned), ceiling(lim) {}
};

// Growth estimator could not continue (seed annihilated, or the
// length recurrence lost validity mid-run).
struct GrowthError : Error {
    using Error::Error;
};

// No integer intersection number reproduces the given stretch factor.
struct NotTwistPairStretchError : Error {
    using Error::Error;
};

}  // namespace diskmcg
