#pragma once

#include <stdexcept>
#include <string>

namespace psc {

// Shape mismatches, out-of-range arguments, malformed method inputs.
struct InvalidArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionError : InvalidArgumentError {
    using InvalidArgumentError::InvalidArgumentError;
};

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cayley-table validation failures; the message names the offending
// triple or element.
struct MalformedGroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix-group closure exceeded the configured ceiling (catches
// generators of infinite order).
struct GroupTooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAHomomorphismError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A relation with a nontrivial l-part was evaluated against data that
// carries no similitude character.
struct MissingSimilitudeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Supplied l is not a homomorphism into k^x; rejected before any axiom runs.
struct MalformedSimilitudeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Permutation enumeration past the desk-scale ceiling (arity > 9).
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SamplerFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace psc
