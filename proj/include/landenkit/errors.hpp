#pragma once

#include <stdexcept>
#include <string>

namespace landenkit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the region where a series or transformation is evaluated.
class DomainError : public Error {
public:
    using Error::Error;
};

// Inadmissible parameters (zero or negative-integer denominator parameter,
// sign restrictions of a theorem, malformed options).
class ParamError : public Error {
public:
    using Error::Error;
};

// Raised by callers that need a converged value when a series hit max_terms.
class SlowConvergence : public Error {
public:
    using Error::Error;
};

// Parameters do not satisfy the hypothesis of the requested inequality.
class RegionMismatch : public Error {
public:
    using Error::Error;
};

// A coefficient window is not monotone in the claimed direction.
class CoefficientMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace landenkit
