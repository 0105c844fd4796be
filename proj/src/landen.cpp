#include "landenkit/landen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "landenkit/errors.hpp"

namespace landenkit::landen {

using specialfn::EllipticMethod;
using specialfn::EvalConfig;
using specialfn::Evaluation;
using specialfn::HyperTriple;

namespace {

void require_unit_closed(double r, const char* what) {
    if (!std::isfinite(r) || r < 0.0 || r > 1.0) {
        throw DomainError(std::string(what) + ": r = " + std::to_string(r) + " outside [0, 1]");
    }
}

void require_unit_open(double r, const char* what) {
    if (!std::isfinite(r) || r <= 0.0 || r >= 1.0) {
        throw DomainError(std::string(what) + ": r = " + std::to_string(r) + " outside (0, 1)");
    }
}

double converged(const Evaluation& e, const char* what) {
    if (!e.converged) {
        throw SlowConvergence(std::string(what) + ": series did not converge within " +
                              std::to_string(e.terms_used) + " terms");
    }
    return e.value;
}

IdentityResidual make_residual(double r, double lhs, double rhs) {
    return {r, lhs, rhs, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs))};
}

double k_value(double modulus, const EvalConfig& cfg, EllipticMethod method) {
    return converged(specialfn::elliptic_k(modulus, method, cfg), "K");
}

void require_transf_params(double a, double b) {
    if (!std::isfinite(a) || !specialfn::admissible_denominator(2.0 * b) ||
        !specialfn::admissible_denominator(b + 0.5)) {
        throw ParamError("transformation needs finite a and admissible 2b, b + 1/2");
    }
}

}  // namespace

double phi_ascend(double r) {
    require_unit_closed(r, "phi_ascend");
    return 2.0 * std::sqrt(r) / (1.0 + r);
}

double psi_descend(double r) {
    require_unit_closed(r, "psi_descend");
    return (1.0 - r) / (1.0 + r);
}

IdentityResidual check_identity_first(double r, const EvalConfig& cfg, EllipticMethod method) {
    require_unit_open(r, "first Landen identity");
    const double lhs = k_value(phi_ascend(r), cfg, method);
    const double rhs = (1.0 + r) * k_value(r, cfg, method);
    return make_residual(r, lhs, rhs);
}

IdentityResidual check_identity_second(double r, const EvalConfig& cfg, EllipticMethod method) {
    require_unit_open(r, "second Landen identity");
    const double lhs = k_value(psi_descend(r), cfg, method);
    const double rhs = 0.5 * (1.0 + r) * k_value(std::sqrt((1.0 - r) * (1.0 + r)), cfg, method);
    return make_residual(r, lhs, rhs);
}

IdentityResidual check_transf(double a, double b, double r, const EvalConfig& cfg) {
    require_unit_open(r, "transformation");
    require_transf_params(a, b);
    const double x = 4.0 * r / ((1.0 + r) * (1.0 + r));
    const double lhs = converged(specialfn::gauss_2f1({a, b, 2.0 * b}, x, cfg), "transformation lhs");
    const double series =
        converged(specialfn::gauss_2f1({a, a + 0.5 - b, b + 0.5}, r * r, cfg), "transformation rhs");
    return make_residual(r, lhs, std::pow(1.0 + r, 2.0 * a) * series);
}

IdentityResidual check_transf_complement(double a, double b, double r, const EvalConfig& cfg) {
    require_unit_open(r, "complementary transformation");
    require_transf_params(a, b);
    const double lhs = converged(specialfn::gauss_2f1({a, b, 2.0 * b}, (1.0 - r) * (1.0 + r), cfg),
                                 "complementary transformation lhs");
    const double psi = psi_descend(r);
    const double series = converged(specialfn::gauss_2f1({a, a + 0.5 - b, b + 0.5}, psi * psi, cfg),
                                    "complementary transformation rhs");
    return make_residual(r, lhs, std::pow(0.5 * (1.0 + r), -2.0 * a) * series);
}

}  // namespace landenkit::landen
