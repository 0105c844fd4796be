#pragma once

#include "landenkit/specialfn.hpp"

namespace landenkit::landen {

/// Evaluated sides of an identity at modulus r.
/// rel_residual = |lhs - rhs| / max(1, |rhs|).
struct IdentityResidual {
    double r = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double rel_residual = 0.0;
};

/// Ascending Landen map r -> 2 sqrt(r) / (1 + r) on [0, 1].
double phi_ascend(double r);

/// Descending Landen map r -> (1 - r) / (1 + r); an involution of [0, 1].
double psi_descend(double r);

// The residual checks accept 0 < r < 1.  A DomainError escapes when a
// transformed argument lands beyond 1 - domain_guard, and SlowConvergence
// when a series side does not converge within max_terms.

/// K(2 sqrt(r)/(1+r)) against (1+r) K(r).
IdentityResidual check_identity_first(
    double r, const specialfn::EvalConfig& cfg = {},
    specialfn::EllipticMethod method = specialfn::EllipticMethod::Agm);

/// K((1-r)/(1+r)) against ((1+r)/2) K(sqrt(1-r^2)).
IdentityResidual check_identity_second(
    double r, const specialfn::EvalConfig& cfg = {},
    specialfn::EllipticMethod method = specialfn::EllipticMethod::Agm);

/// F(a,b;2b;4r/(1+r)^2) against (1+r)^(2a) F(a, a+1/2-b; b+1/2; r^2).
IdentityResidual check_transf(double a, double b, double r,
                              const specialfn::EvalConfig& cfg = {});

/// F(a,b;2b;1-r^2) against ((1+r)/2)^(-2a) F(a, a+1/2-b; b+1/2; ((1-r)/(1+r))^2).
IdentityResidual check_transf_complement(double a, double b, double r,
                                         const specialfn::EvalConfig& cfg = {});

}  // namespace landenkit::landen
