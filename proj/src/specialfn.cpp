#include "landenkit/specialfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "landenkit/errors.hpp"

namespace landenkit::specialfn {

namespace {

bool nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

// Neumaier's variant of compensated summation.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

void require_nonnegative(double x, const char* what) {
    if (!std::isfinite(x) || x < 0.0) {
        throw DomainError(std::string(what) + ": argument must be a finite x >= 0, got " +
                          std::to_string(x));
    }
}

void require_below_guard(double x, const EvalConfig& cfg, const char* what) {
    if (x > 1.0 - cfg.domain_guard) {
        throw DomainError(std::string(what) + ": argument " + std::to_string(x) +
                          " exceeds 1 - domain_guard");
    }
}

}  // namespace

bool admissible_denominator(double c) { return std::isfinite(c) && !nonpositive_integer(c); }

bool HyperTriple::terminating() const { return nonpositive_integer(a) || nonpositive_integer(b); }

BesselParams::BesselParams(double nu, double b_shape, double c_sign)
    : nu_(nu), b_shape_(b_shape), c_sign_(c_sign), kappa_(nu + (b_shape + 1.0) / 2.0) {}

BesselParams BesselParams::from_kappa(double kappa, double c_sign) {
    return BesselParams(kappa, -1.0, c_sign);
}

void EvalConfig::validate() const {
    if (!(tail_tol > 0.0)) throw ParamError("tail_tol must be positive");
    if (max_terms < 1) throw ParamError("max_terms must be at least 1");
    if (!(domain_guard > 0.0 && domain_guard < 1.0)) {
        throw ParamError("domain_guard must lie in (0, 1)");
    }
}

double pochhammer(double a, std::size_t n) {
    double p = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        p *= a + static_cast<double>(k);
        if (p == 0.0) break;
    }
    return p;
}

Evaluation sum_ratio_series(const CoefficientRatio& ratio, double limit_ratio, double x,
                            const EvalConfig& cfg) {
    cfg.validate();
    CompensatedSum sum;
    double term = 1.0;
    const double q_limit = std::abs(limit_ratio * x);
    double q = std::numeric_limits<double>::infinity();

    for (std::size_t n = 0; n < cfg.max_terms; ++n) {
        sum.add(term);
        const double rho = ratio(n) * x;
        const double next = term * rho;
        if (next == 0.0) {
            return {sum.value(), n + 1, 0.0, true};
        }
        q = std::max(std::abs(rho), q_limit);
        if (q < 1.0) {
            const double partial = sum.value();
            const double scale = cfg.tail_tol * std::max(1.0, std::abs(partial));
            const double tail = std::abs(term) * q / (1.0 - q);
            if (std::abs(term) <= scale && tail <= scale) {
                return {partial, n + 1, tail, true};
            }
        }
        term = next;
    }

    const double tail = q < 1.0 ? std::abs(term) / (1.0 - q)
                                : std::numeric_limits<double>::infinity();
    return {sum.value(), cfg.max_terms, tail, false};
}

Evaluation gauss_2f1(const HyperTriple& t, double x, const EvalConfig& cfg) {
    cfg.validate();
    if (!t.admissible()) {
        throw ParamError("2F1: c = " + std::to_string(t.c) + " is zero or a negative integer");
    }
    require_nonnegative(x, "2F1");
    if (!t.terminating()) require_below_guard(x, cfg, "2F1");

    const auto ratio = [&t](std::size_t n) {
        const double k = static_cast<double>(n);
        return (k + t.a) * (k + t.b) / ((k + t.c) * (k + 1.0));
    };
    return sum_ratio_series(ratio, 1.0, x, cfg);
}

Evaluation elliptic_k(double r, EllipticMethod method, const EvalConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(r) || r < 0.0 || r > 1.0 - cfg.domain_guard) {
        throw DomainError("K: modulus " + std::to_string(r) + " outside [0, 1 - domain_guard]");
    }
    constexpr double half_pi = std::numbers::pi / 2.0;

    if (method == EllipticMethod::Series) {
        Evaluation e = gauss_2f1({0.5, 0.5, 1.0}, r * r, cfg);
        e.value *= half_pi;
        e.tail_bound *= half_pi;
        return e;
    }

    double a = 1.0;
    double b = std::sqrt((1.0 - r) * (1.0 + r));
    std::size_t iterations = 0;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    while (std::abs(a - b) > 2.0 * eps * a && iterations < 64) {
        const double mean = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = mean;
        ++iterations;
    }
    const double value = half_pi / a;
    return {value, iterations, half_pi * std::abs(a - b) / (a * b), true};
}

Evaluation kummer_phi(const KummerParams& kp, double x, const EvalConfig& cfg) {
    cfg.validate();
    if (!kp.admissible()) {
        throw ParamError("Kummer: q = " + std::to_string(kp.q) + " is zero or a negative integer");
    }
    require_nonnegative(x, "Kummer");
    const auto ratio = [&kp](std::size_t n) {
        const double k = static_cast<double>(n);
        return (k + kp.p) / ((k + kp.q) * (k + 1.0));
    };
    return sum_ratio_series(ratio, 0.0, x, cfg);
}

Evaluation bessel_u(const BesselParams& bp, double x, const EvalConfig& cfg) {
    cfg.validate();
    if (!bp.admissible()) {
        throw ParamError("Bessel: kappa = " + std::to_string(bp.kappa()) +
                         " is zero or a negative integer");
    }
    require_nonnegative(x, "Bessel");
    const double factor = -bp.c_sign() / 4.0;
    const double kappa = bp.kappa();
    const auto ratio = [factor, kappa](std::size_t n) {
        const double k = static_cast<double>(n);
        return factor / ((k + kappa) * (k + 1.0));
    };
    return sum_ratio_series(ratio, 0.0, x, cfg);
}

double closed_form(ClosedForm form, double x) {
    if (!std::isfinite(x) || x < 0.0 || x >= 1.0) {
        throw DomainError("closed form: x = " + std::to_string(x) + " outside [0, 1)");
    }
    const double s = std::sqrt(x);
    switch (form) {
        case ClosedForm::ArcsinForm:
            return x == 0.0 ? 1.0 : std::asin(s) / s;
        case ClosedForm::LogForm:
            return x == 0.0 ? 1.0 : std::atanh(s) / s;
        case ClosedForm::GeomForm:
            return 1.0 / (1.0 - x);
        case ClosedForm::InvSqrtForm:
            return 1.0 / std::sqrt(1.0 - x);
    }
    throw ParamError("unknown closed form");
}

HyperTriple closed_form_triple(ClosedForm form) {
    switch (form) {
        case ClosedForm::ArcsinForm: return {0.5, 0.5, 1.5};
        case ClosedForm::LogForm: return {0.5, 1.0, 1.5};
        case ClosedForm::GeomForm: return {1.0, 1.0, 1.0};
        case ClosedForm::InvSqrtForm: return {1.0, 0.5, 1.0};
    }
    throw ParamError("unknown closed form");
}

std::string_view to_string(ClosedForm form) {
    switch (form) {
        case ClosedForm::ArcsinForm: return "arcsin_form";
        case ClosedForm::LogForm: return "log_form";
        case ClosedForm::GeomForm: return "geom_form";
        case ClosedForm::InvSqrtForm: return "inv_sqrt_form";
    }
    return "?";
}

ClosedForm closed_form_from_string(std::string_view name) {
    for (auto f : {ClosedForm::ArcsinForm, ClosedForm::LogForm, ClosedForm::GeomForm,
                   ClosedForm::InvSqrtForm}) {
        if (to_string(f) == name) return f;
    }
    throw ParamError("unknown closed form '" + std::string(name) + "'");
}

CoefficientSeries::CoefficientSeries(Family family, std::vector<double> coeffs)
    : family_(family), coeffs_(std::move(coeffs)) {}

CoefficientSeries CoefficientSeries::explicit_list(std::vector<double> coeffs) {
    if (coeffs.empty()) throw ParamError("explicit coefficient list is empty");
    for (double c : coeffs) {
        if (!std::isfinite(c)) throw ParamError("coefficient list contains a non-finite value");
    }
    return CoefficientSeries(Family::Explicit, std::move(coeffs));
}

CoefficientSeries CoefficientSeries::ones() { return CoefficientSeries(Family::Ones, {}); }
CoefficientSeries CoefficientSeries::inv_omega() { return CoefficientSeries(Family::InvOmega, {}); }
CoefficientSeries CoefficientSeries::inv_factorial() {
    return CoefficientSeries(Family::InvFactorial, {});
}

std::string_view CoefficientSeries::name() const {
    switch (family_) {
        case Family::Explicit: return "explicit";
        case Family::Ones: return "ones";
        case Family::InvOmega: return "inv_omega";
        case Family::InvFactorial: return "inv_factorial";
    }
    return "?";
}

namespace {

double family_ratio(CoefficientSeries::Family family, std::size_t n) {
    const double k = static_cast<double>(n);
    switch (family) {
        case CoefficientSeries::Family::Ones: return 1.0;
        case CoefficientSeries::Family::InvOmega: {
            const double r = (k + 0.5) / (k + 1.0);
            return r * r;
        }
        case CoefficientSeries::Family::InvFactorial: return 1.0 / (k + 1.0);
        case CoefficientSeries::Family::Explicit: break;
    }
    return 0.0;
}

}  // namespace

double CoefficientSeries::coeff(std::size_t n) const {
    if (family_ == Family::Explicit) return n < coeffs_.size() ? coeffs_[n] : 0.0;
    double c = 1.0;
    for (std::size_t k = 0; k < n; ++k) c *= family_ratio(family_, k);
    return c;
}

Evaluation CoefficientSeries::evaluate(double x, const EvalConfig& cfg) const {
    cfg.validate();
    require_nonnegative(x, "power series");
    if (family_ == Family::Explicit) {
        CompensatedSum sum;
        double power = 1.0;
        for (double c : coeffs_) {
            sum.add(c * power);
            power *= x;
        }
        return {sum.value(), coeffs_.size(), 0.0, true};
    }
    if (family_ != Family::InvFactorial) require_below_guard(x, cfg, "power series");
    const Family family = family_;
    const double limit = family == Family::InvFactorial ? 0.0 : 1.0;
    return sum_ratio_series([family](std::size_t n) { return family_ratio(family, n); }, limit, x,
                            cfg);
}

}  // namespace landenkit::specialfn
