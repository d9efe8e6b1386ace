#pragma once

#include <stdexcept>
#include <string>

namespace stj {

// Argument outside the function's domain (u <= 0, z = 0 under log, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// s = 1 for the Hurwitz zeta function.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// Refinement or summation hit its cap before reaching tolerance.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cancellation ate more digits than the guard allows.
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two internal routes of the same quantity disagree beyond the allowed slack.
struct RouteDisagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace stj
