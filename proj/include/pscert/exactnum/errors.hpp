#pragma once

#include <stdexcept>
#include <string>

namespace pscert {

/// Interval operation evaluated outside its domain (log of a non-positive
/// enclosure, division by an enclosure containing zero).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Configured precision cap reached before the requested width was met.
struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AmbiguousEnclosure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands live over different coefficient rings (e.g. two prime fields).
struct RingMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An exact division that must succeed did not. Always an internal bug.
struct DivisionFailure : std::logic_error {
    using std::logic_error::logic_error;
};

struct BadPrime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GcdNotOne : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegreeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PreconditionUnverifiable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WidthUnreachable : PrecisionExhausted {
    using PrecisionExhausted::PrecisionExhausted;
};

}  // namespace pscert
