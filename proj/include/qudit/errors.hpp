#ifndef QUDIT_ERRORS_HPP
#define QUDIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qudit {

// Mixing values built over different primes d is always a caller bug.
struct DimensionMismatchError : std::invalid_argument {
    explicit DimensionMismatchError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ShapeMismatchError : std::invalid_argument {
    explicit ShapeMismatchError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Comparing matrices whose sqrt-d exponents still differ after normalization.
// Such values are incomparable, which is not the same thing as unequal.
struct IncomparableScaleError : std::logic_error {
    explicit IncomparableScaleError(const std::string& msg) : std::logic_error(msg) {}
};

// The input matrix is not w^k * Pi_{nm} for any (k, n, m).
struct NotPhaseKpmError : std::runtime_error {
    explicit NotPhaseKpmError(const std::string& msg) : std::runtime_error(msg) {}
};

// A cross-check between two independent computation routes disagreed.
struct InternalConsistencyError : std::logic_error {
    explicit InternalConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace qudit

#endif
