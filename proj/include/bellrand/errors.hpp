#pragma once

#include <stdexcept>
#include <string>

namespace bellrand {

struct InvalidSettingCount : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct TooLargeForBruteForce : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedPhase : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooLargeForDense : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotAnticommuting : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InsufficientCopies : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SchemeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace bellrand
