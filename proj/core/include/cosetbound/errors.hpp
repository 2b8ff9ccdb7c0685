#pragma once

#include <stdexcept>

namespace cosetbound {

// Evaluation of a rational function at a zero of its denominator.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Inversion or unit decomposition of a series whose constant term is zero.
struct NotAUnitError : std::domain_error {
    using std::domain_error::domain_error;
};

// Expansion at the origin of a rational function with den(0) = 0.
struct PoleAtOriginError : std::domain_error {
    using std::domain_error::domain_error;
};

// Search over a group whose generators are multiplicatively dependent
// modulo constants.
struct IndependenceError : std::domain_error {
    using std::domain_error::domain_error;
};

// Malformed instance, report, or value text.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cosetbound
