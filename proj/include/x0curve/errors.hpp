#ifndef X0CURVE_ERRORS_HPP
#define X0CURVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace x0 {

// A query or operation needs coefficients outside the certified window.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Inverting a series whose certified window holds no nonzero term.
class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Refused because the request exceeds a configured resource cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exactness assertion failed (odd or negative exponent, inexact division).
// Always an implementation bug, never a user error.
class IntegralityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A claim that does not apply to the given parameters (e.g. odd level).
class NotApplicable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace x0

#endif
