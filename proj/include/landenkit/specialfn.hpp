#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

namespace landenkit::specialfn {

/// True unless `c` is zero or a negative integer, i.e. unless some (c)_n
/// vanishes and the series coefficient is undefined.
bool admissible_denominator(double c);

/// Parameters (a, b; c) of the Gauss function 2F1.
struct HyperTriple {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;

    bool admissible() const { return admissible_denominator(c); }
    /// True when (a)_n or (b)_n vanishes for some n, so the series is a polynomial.
    bool terminating() const;
};

/// Parameters (p; q) of the Kummer function Phi(p, q; x).
struct KummerParams {
    double p = 0.0;
    double q = 1.0;

    bool admissible() const { return admissible_denominator(q); }
};

/// Parameters of the generalized Bessel series u_nu.  The shape and sign
/// parameters are called b and c in the usual notation; they are renamed here
/// so they cannot be confused with the 2F1 triple.  kappa is always derived
/// as nu + (b_shape + 1)/2.
class BesselParams {
public:
    BesselParams(double nu, double b_shape, double c_sign);

    /// Picks nu = kappa, b_shape = -1 so that kappa is reproduced bit-for-bit.
    static BesselParams from_kappa(double kappa, double c_sign);

    double nu() const { return nu_; }
    double b_shape() const { return b_shape_; }
    double c_sign() const { return c_sign_; }
    double kappa() const { return kappa_; }
    bool admissible() const { return admissible_denominator(kappa_); }

private:
    double nu_;
    double b_shape_;
    double c_sign_;
    double kappa_;
};

struct EvalConfig {
    double tail_tol = 1e-12;
    std::size_t max_terms = 1'000'000;
    double domain_guard = 1e-8;

    /// Throws ParamError when a field is out of range.
    void validate() const;
};

/// Result of a truncated series.  When `converged` is set,
/// tail_bound <= tail_tol * max(1, |value|).
struct Evaluation {
    double value = 0.0;
    std::size_t terms_used = 0;
    double tail_bound = 0.0;
    bool converged = false;
};

/// Rising factorial (a)_n with (a)_0 = 1 for every a, including a = 0.
double pochhammer(double a, std::size_t n);

/// Coefficient ratio c_{n+1}/c_n of a power series with c_0 = 1.
using CoefficientRatio = std::function<double(std::size_t)>;

/// Sums sum_n c_n x^n, c_0 = 1, from its coefficient ratio.  `limit_ratio`
/// is lim |c_{n+1}/c_n| (0 for entire series); the geometric majorant uses
/// q = max(|ratio(n) x|, limit_ratio |x|).  Stops when the current term and
/// the majorant of the omitted tail are both below tail_tol * max(1, |sum|).
Evaluation sum_ratio_series(const CoefficientRatio& ratio, double limit_ratio, double x,
                            const EvalConfig& cfg);

/// 2F1(a, b; c; x) by direct summation on 0 <= x <= 1 - domain_guard
/// (any x >= 0 when the series terminates).  Throws ParamError for an
/// inadmissible c and DomainError outside the range.
Evaluation gauss_2f1(const HyperTriple& t, double x, const EvalConfig& cfg = {});

enum class EllipticMethod { Series, Agm };

/// Complete elliptic integral of the first kind K(r), r the modulus.
Evaluation elliptic_k(double r, EllipticMethod method = EllipticMethod::Agm,
                      const EvalConfig& cfg = {});

/// Kummer confluent function Phi(p, q; x), x >= 0.
Evaluation kummer_phi(const KummerParams& kp, double x, const EvalConfig& cfg = {});

/// Generalized Bessel series sum (-c/4)^n x^n / ((kappa)_n n!), x >= 0.
Evaluation bessel_u(const BesselParams& bp, double x, const EvalConfig& cfg = {});

enum class ClosedForm { ArcsinForm, LogForm, GeomForm, InvSqrtForm };

/// Elementary representations of 2F1 on [0, 1):
///   ArcsinForm  (1/2, 1/2; 3/2)  asin(sqrt x)/sqrt x
///   LogForm     (1/2, 1;   3/2)  atanh(sqrt x)/sqrt x
///   GeomForm    (1,   1;   1)    1/(1 - x)
///   InvSqrtForm (1,   1/2; 1)    (1 - x)^(-1/2)
double closed_form(ClosedForm form, double x);
HyperTriple closed_form_triple(ClosedForm form);
std::string_view to_string(ClosedForm form);
ClosedForm closed_form_from_string(std::string_view name);

/// Power series given by coefficients a_n.  `Explicit` holds a finite list
/// (zero beyond it); the families are infinite series defined by a
/// coefficient ratio and start at a_0 = 1.
class CoefficientSeries {
public:
    enum class Family { Explicit, Ones, InvOmega, InvFactorial };

    static CoefficientSeries explicit_list(std::vector<double> coeffs);
    static CoefficientSeries ones();
    static CoefficientSeries inv_omega();      // a_n = [(1/2)_n / n!]^2
    static CoefficientSeries inv_factorial();  // a_n = 1/n!

    Family family() const { return family_; }
    std::string_view name() const;
    const std::vector<double>& coefficients() const { return coeffs_; }

    double coeff(std::size_t n) const;
    /// Evaluates f(x) = sum a_n x^n.  Families need 0 <= x <= 1 - domain_guard
    /// (InvFactorial: any x >= 0).
    Evaluation evaluate(double x, const EvalConfig& cfg = {}) const;

private:
    CoefficientSeries(Family family, std::vector<double> coeffs);
    Family family_;
    std::vector<double> coeffs_;
};

}  // namespace landenkit::specialfn
