#include "landenkit/verify.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <system_error>
#include <type_traits>

#include "landenkit/errors.hpp"

namespace landenkit::verify {

using regions::Branch;
using regions::Monotonicity;

namespace {

constexpr double kTwoOverPi = 2.0 / std::numbers::pi;

void require_open_unit(double r) {
    if (!std::isfinite(r) || r <= 0.0 || r >= 1.0) {
        throw DomainError("modulus r = " + std::to_string(r) + " outside (0, 1)");
    }
}

double ascend_argument(double r) { return 4.0 * r / ((1.0 + r) * (1.0 + r)); }

bool is_elliptic_triple(const HyperTriple& t) { return t.a == 0.5 && t.b == 0.5 && t.c == 1.0; }

double elliptic_quotient_denominator(double x, const EvalConfig& cfg) {
    return kTwoOverPi *
           specialfn::elliptic_k(std::sqrt(x), specialfn::EllipticMethod::Agm, cfg).value;
}

double converged_value(const specialfn::Evaluation& e, const char* what) {
    if (!e.converged) {
        throw SlowConvergence(std::string(what) + " did not converge within " +
                              std::to_string(e.terms_used) + " terms");
    }
    return e.value;
}

// 2F1 by series; the elliptic triple falls back to the AGM when the series
// runs out of terms.
double hyp(const HyperTriple& t, double x, const EvalConfig& cfg) {
    const auto e = specialfn::gauss_2f1(t, x, cfg);
    if (e.converged) return e.value;
    if (is_elliptic_triple(t)) return elliptic_quotient_denominator(x, cfg);
    return converged_value(e, "2F1");
}

std::vector<Param> triple_params(const HyperTriple& t) {
    return {{"a", t.a}, {"b", t.b}, {"c", t.c}};
}

template <typename PointFn>
SweepReport run_sweep(std::string theorem_id, std::vector<Param> params, const Grid& grid,
                      PointFn&& point) {
    grid.validate();
    SweepReport report;
    report.theorem_id = std::move(theorem_id);
    report.params = std::move(params);
    report.grid = grid;
    for (double r : grid.points()) report.records.push_back(point(r));
    summarize(report);
    return report;
}

bool le_tol(double x, double y) {
    return x <= y + 1e-12 * std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace

void Grid::validate() const {
    if (!(start > 0.0 && start < end && end < 1.0)) {
        throw ParamError("grid needs 0 < start < end < 1");
    }
    if (!(step > 0.0)) throw ParamError("grid step must be positive");
    if ((end - start) / step > 1e6) throw ParamError("grid has more than 10^6 steps");
}

std::vector<double> Grid::points() const {
    validate();
    const auto count = static_cast<std::size_t>(std::floor((end - start) / step + 1e-9));
    std::vector<double> out;
    out.reserve(count + 1);
    for (std::size_t i = 0; i <= count; ++i) {
        const double r = start + static_cast<double>(i) * step;
        out.push_back(std::round(r * 1e12) / 1e12);
    }
    return out;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "Holds";
        case Verdict::Violated: return "Violated";
        case Verdict::Indeterminate: return "Indeterminate";
    }
    return "?";
}

Verdict classify_margin(double margin, double margin_tol) {
    if (std::isnan(margin)) return Verdict::Violated;
    if (std::abs(margin) <= margin_tol) return Verdict::Indeterminate;
    return margin > 0.0 ? Verdict::Holds : Verdict::Violated;
}

InequalityRecord make_record(double r, double lhs, double rhs, double margin, double margin_tol) {
    return {r, lhs, rhs, margin, classify_margin(margin, margin_tol)};
}

void summarize(SweepReport& report) {
    report.min_margin = std::numeric_limits<double>::infinity();
    report.n_violations = 0;
    for (const auto& rec : report.records) {
        report.min_margin = std::min(report.min_margin, rec.margin);
        if (rec.verdict == Verdict::Violated) ++report.n_violations;
    }
}

// ---------------------------------------------------------------------------

std::string_view to_string(Thm21Direction d) {
    switch (d) {
        case Thm21Direction::Ineq1: return "ineq1";
        case Thm21Direction::Ineq2: return "ineq2";
        case Thm21Direction::Ineq3: return "ineq3";
        case Thm21Direction::Ineq4: return "ineq4";
    }
    return "?";
}

InequalityRecord thm21_point(const HyperTriple& t, Thm21Direction dir, double r,
                             const SweepOptions& opts) {
    require_open_unit(r);
    double lhs = 0.0;
    double rhs = 0.0;
    if (dir == Thm21Direction::Ineq1 || dir == Thm21Direction::Ineq3) {
        lhs = hyp(t, ascend_argument(r), opts.eval);
        rhs = (1.0 + r) * hyp(t, r * r, opts.eval);
    } else {
        const double psi = (1.0 - r) / (1.0 + r);
        lhs = hyp(t, psi * psi, opts.eval);
        rhs = 0.5 * (1.0 + r) * hyp(t, (1.0 - r) * (1.0 + r), opts.eval);
    }
    const bool lhs_larger = dir == Thm21Direction::Ineq1 || dir == Thm21Direction::Ineq4;
    return make_record(r, lhs, rhs, lhs_larger ? lhs - rhs : rhs - lhs, opts.margin_tol);
}

SweepReport sweep_thm21(const HyperTriple& t, Thm21Direction dir, const Grid& grid,
                        const SweepOptions& opts) {
    if (!t.admissible()) throw ParamError("c is zero or a negative integer");
    if (!opts.override_region) {
        const bool increasing = dir == Thm21Direction::Ineq1 || dir == Thm21Direction::Ineq2;
        const Branch needed = increasing ? Branch::IncreasingBranch : Branch::DecreasingBranch;
        if (!regions::thm21_holds(t, needed)) {
            throw RegionMismatch("triple misses the hypothesis required for " +
                                 std::string(to_string(dir)));
        }
    }
    return run_sweep("2.1:" + std::string(to_string(dir)), triple_params(t), grid,
                     [&](double r) { return thm21_point(t, dir, r, opts); });
}

// ---------------------------------------------------------------------------

std::string_view to_string(Thm22Direction d) {
    return d == Thm22Direction::Ineq5 ? "ineq5" : "reversed";
}

void check_coefficient_window(const CoefficientSeries& f, Thm22Direction dir, std::size_t window) {
    std::size_t last = window;
    if (f.family() == CoefficientSeries::Family::Explicit) {
        if (f.coefficients().size() > kMaxCoefficientWindow + 1) {
            throw ParamError("explicit coefficient list longer than 513 entries");
        }
        last = f.coefficients().size();
    } else if (window < 1 || window > kMaxCoefficientWindow) {
        throw ParamError("coefficient window must lie in [1, 512]");
    }

    std::vector<double> weighted;
    weighted.reserve(last + 1);
    double omega_root = 1.0;  // sqrt(omega_n)
    for (std::size_t n = 0; n <= last; ++n) {
        if (n > 0) {
            const double k = static_cast<double>(n - 1);
            omega_root *= (k + 1.0) / (k + 0.5);
        }
        weighted.push_back(f.coeff(n) * omega_root * omega_root);
    }

    const auto cls = regions::classify_monotone(weighted).classification;
    const bool ok = cls == Monotonicity::Constant ||
                    (dir == Thm22Direction::Ineq5 ? cls == Monotonicity::Increasing
                                                  : cls == Monotonicity::Decreasing);
    if (!ok) {
        throw CoefficientMismatch("{a_n omega_n} is " + std::string(regions::to_string(cls)) +
                                  " on n <= " + std::to_string(last) + ", not monotone as " +
                                  std::string(to_string(dir)) + " requires");
    }
}

InequalityRecord thm22_point(const CoefficientSeries& f, Thm22Direction dir, double r,
                             const SweepOptions& opts) {
    require_open_unit(r);
    const double lhs = converged_value(f.evaluate(ascend_argument(r), opts.eval), "power series");
    const double rhs = (1.0 + r) * converged_value(f.evaluate(r * r, opts.eval), "power series");
    return make_record(r, lhs, rhs, dir == Thm22Direction::Ineq5 ? lhs - rhs : rhs - lhs,
                       opts.margin_tol);
}

SweepReport sweep_thm22(const CoefficientSeries& f, Thm22Direction dir, const Grid& grid,
                        const SweepOptions& opts, std::size_t window) {
    if (!opts.override_region) check_coefficient_window(f, dir, window);
    const double n_coeffs = f.family() == CoefficientSeries::Family::Explicit
                                ? static_cast<double>(f.coefficients().size())
                                : static_cast<double>(window + 1);
    return run_sweep("2.2:" + std::string(to_string(dir)) + ":" + std::string(f.name()),
                     {{"n_coeffs", n_coeffs}}, grid,
                     [&](double r) { return thm22_point(f, dir, r, opts); });
}

// ---------------------------------------------------------------------------

namespace {

double thm23_value(const Thm23Params& params, double x, const EvalConfig& cfg) {
    if (const auto* bp = std::get_if<BesselParams>(&params)) {
        return converged_value(specialfn::bessel_u(*bp, x, cfg), "Bessel series");
    }
    return converged_value(specialfn::kummer_phi(std::get<KummerParams>(params), x, cfg),
                           "Kummer series");
}

}  // namespace

InequalityRecord thm23_point(const Thm23Params& params, double r, const SweepOptions& opts) {
    require_open_unit(r);
    const double lhs = thm23_value(params, ascend_argument(r), opts.eval);
    const double rhs = (1.0 + r) * thm23_value(params, r * r, opts.eval);
    return make_record(r, lhs, rhs, rhs - lhs, opts.margin_tol);
}

SweepReport sweep_thm23(const Thm23Params& params, const Grid& grid, const SweepOptions& opts) {
    std::string id;
    std::vector<Param> record_params;
    regions::RegionVerdict verdict;
    if (const auto* bp = std::get_if<BesselParams>(&params)) {
        id = "2.3:bessel";
        record_params = {{"nu", bp->nu()},
                         {"b_shape", bp->b_shape()},
                         {"c_sign", bp->c_sign()},
                         {"kappa", bp->kappa()}};
        verdict = regions::classify_bessel(*bp);
    } else {
        const auto& kp = std::get<KummerParams>(params);
        id = "2.3:kummer";
        record_params = {{"p", kp.p}, {"q", kp.q}};
        verdict = regions::classify_kummer(kp);
    }
    if (!opts.override_region && verdict.branch != Branch::DecreasingBranch) {
        throw RegionMismatch("parameters miss the decreasing-quotient condition for " + id);
    }
    return run_sweep(std::move(id), std::move(record_params), grid,
                     [&](double r) { return thm23_point(params, r, opts); });
}

// ---------------------------------------------------------------------------

std::string_view to_string(Thm24Direction d) {
    return d == Thm24Direction::Ineq6 ? "ineq6" : "ineq7";
}

InequalityRecord thm24_point(const HyperTriple& t, Thm24Direction dir, double r,
                             const SweepOptions& opts) {
    require_open_unit(r);
    const double lhs = hyp(t, ascend_argument(r), opts.eval);
    const double rhs = std::pow(1.0 + r, 2.0 * t.a) * hyp(t, r * r, opts.eval);
    return make_record(r, lhs, rhs, dir == Thm24Direction::Ineq6 ? lhs - rhs : rhs - lhs,
                       opts.margin_tol);
}

SweepReport sweep_thm24(const HyperTriple& t, Thm24Direction dir, const Grid& grid,
                        const SweepOptions& opts) {
    if (!t.admissible()) throw ParamError("c is zero or a negative integer");
    if (!opts.override_region) {
        const Branch needed =
            dir == Thm24Direction::Ineq6 ? Branch::IncreasingBranch : Branch::DecreasingBranch;
        if (!regions::thm24_holds(t, needed)) {
            throw RegionMismatch("triple misses every sub-condition for " +
                                 std::string(to_string(dir)));
        }
    }
    return run_sweep("2.4:" + std::string(to_string(dir)), triple_params(t), grid,
                     [&](double r) { return thm24_point(t, dir, r, opts); });
}

// ---------------------------------------------------------------------------

bool ineq9_hypothesis(double a, double b) {
    const double b2 = 2.0 * b;
    const bool case_one = le_tol(1.0, b2) && le_tol(b2, a + 0.5);
    const bool case_two = b2 > 0.0 && le_tol(b2, a);
    const bool gamma_route = b > 0.0 && le_tol(b, a) && le_tol(3.0 * b, 2.0 * a + 0.5);
    return case_one || case_two || gamma_route;
}

InequalityRecord ineq9_point(double a, double b, double r, const SweepOptions& opts) {
    require_open_unit(r);
    const double x = r * r;
    const double lhs = hyp({a, b, 2.0 * b}, x, opts.eval);
    const double rhs = hyp({a, a + 0.5 - b, b + 0.5}, x, opts.eval);
    return make_record(r, lhs, rhs, rhs - lhs, opts.margin_tol);
}

SweepReport sweep_ineq9(double a, double b, const Grid& grid, const SweepOptions& opts) {
    if (!specialfn::admissible_denominator(2.0 * b) ||
        !specialfn::admissible_denominator(b + 0.5)) {
        throw ParamError("2b and b + 1/2 must be admissible");
    }
    if (!opts.override_region && !ineq9_hypothesis(a, b)) {
        throw RegionMismatch("(a, b) satisfies none of the cases behind ineq9");
    }
    return run_sweep("ineq9", {{"a", a}, {"b", b}}, grid,
                     [&](double r) { return ineq9_point(a, b, r, opts); });
}

// ---------------------------------------------------------------------------

std::string_view to_string(ElementaryCheck c) {
    return c == ElementaryCheck::Arcsin ? "arcsin" : "logpow";
}

InequalityRecord elementary_point(ElementaryCheck check, double r, double margin_tol) {
    require_open_unit(r);
    const double s = std::sqrt(r);
    if (check == ElementaryCheck::Arcsin) {
        const double lhs = 0.5 * s * std::asin(2.0 * s / (1.0 + r));
        const double rhs = std::asin(r);
        return make_record(r, lhs, rhs, rhs - lhs, margin_tol);
    }
    const double lhs = std::pow((1.0 + s) / (1.0 - s), s);
    const double rhs = (1.0 + r) / (1.0 - r);
    return make_record(r, lhs, rhs, lhs - rhs, margin_tol);
}

SweepReport sweep_elementary(ElementaryCheck check, const Grid& grid, double margin_tol) {
    return run_sweep("elementary:" + std::string(to_string(check)), {}, grid,
                     [&](double r) { return elementary_point(check, r, margin_tol); });
}

std::array<SweepReport, 2> elementary_checks(const Grid& grid, double margin_tol) {
    return {sweep_elementary(ElementaryCheck::Arcsin, grid, margin_tol),
            sweep_elementary(ElementaryCheck::LogPower, grid, margin_tol)};
}

// ---------------------------------------------------------------------------

Monotonicity quotient_probe(const Numerator& numerator, const Grid& grid, const EvalConfig& cfg) {
    const auto numerator_value = [&](double x) {
        return std::visit(
            [&](const auto& n) -> double {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, HyperTriple>) {
                    return converged_value(specialfn::gauss_2f1(n, x, cfg), "2F1");
                } else if constexpr (std::is_same_v<T, KummerParams>) {
                    return converged_value(specialfn::kummer_phi(n, x, cfg), "Kummer series");
                } else if constexpr (std::is_same_v<T, BesselParams>) {
                    return converged_value(specialfn::bessel_u(n, x, cfg), "Bessel series");
                } else {
                    return converged_value(n.evaluate(x, cfg), "power series");
                }
            },
            numerator);
    };
    std::vector<double> quotient;
    for (double x : grid.points()) {
        quotient.push_back(numerator_value(x) / elliptic_quotient_denominator(x, cfg));
    }
    return regions::classify_monotone(quotient).classification;
}

// ---------------------------------------------------------------------------

double parse_real(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto decimal = [&](std::string_view s) {
        s = trim(s);
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
            throw ParamError("cannot parse number '" + std::string(text) + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return decimal(text);
    const double num = decimal(text.substr(0, slash));
    const double den = decimal(text.substr(slash + 1));
    if (den == 0.0) throw ParamError("zero denominator in '" + std::string(text) + "'");
    return num / den;
}

std::vector<ParamRange> parse_box(std::string_view text) {
    std::vector<ParamRange> box;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);

        const auto c1 = item.find(':');
        const auto c2 = c1 == std::string_view::npos ? c1 : item.find(':', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos || c1 == 0) {
            throw ParamError("box entry '" + std::string(item) + "' is not name:lo:hi");
        }
        ParamRange range{std::string(item.substr(0, c1)), parse_real(item.substr(c1 + 1, c2 - c1 - 1)),
                         parse_real(item.substr(c2 + 1))};
        if (range.lo > range.hi) throw ParamError("box entry '" + range.name + "' has lo > hi");
        box.push_back(std::move(range));
    }
    if (box.empty()) throw ParamError("empty parameter box");
    return box;
}

namespace {

std::vector<std::string> search_param_names(const SearchSpec& spec) {
    if (spec.theorem_id == "2.1" || spec.theorem_id == "2.4") return {"a", "b", "c"};
    if (spec.theorem_id == "ineq9") return {"a", "b"};
    if (spec.theorem_id == "2.3") {
        if (spec.direction == "bessel") return {"kappa", "c_sign"};
        if (spec.direction == "kummer") return {"p", "q"};
        throw ParamError("search on 2.3 needs direction bessel or kummer");
    }
    throw ParamError("search does not support theorem '" + spec.theorem_id + "'");
}

Thm21Direction thm21_direction(const std::string& d) {
    for (auto dir : {Thm21Direction::Ineq1, Thm21Direction::Ineq2, Thm21Direction::Ineq3,
                     Thm21Direction::Ineq4}) {
        if (to_string(dir) == d) return dir;
    }
    throw ParamError("direction for 2.1 must be ineq1..ineq4, got '" + d + "'");
}

Thm24Direction thm24_direction(const std::string& d) {
    if (d == "ineq6") return Thm24Direction::Ineq6;
    if (d == "ineq7") return Thm24Direction::Ineq7;
    throw ParamError("direction for 2.4 must be ineq6 or ineq7, got '" + d + "'");
}

SweepReport sweep_sample(const SearchSpec& spec, const std::vector<Param>& p, const Grid& grid,
                         const SweepOptions& opts) {
    if (spec.theorem_id == "2.1") {
        return sweep_thm21({p[0].value, p[1].value, p[2].value}, thm21_direction(spec.direction),
                           grid, opts);
    }
    if (spec.theorem_id == "2.4") {
        return sweep_thm24({p[0].value, p[1].value, p[2].value}, thm24_direction(spec.direction),
                           grid, opts);
    }
    if (spec.theorem_id == "ineq9") return sweep_ineq9(p[0].value, p[1].value, grid, opts);
    if (spec.direction == "bessel") {
        return sweep_thm23(BesselParams::from_kappa(p[0].value, p[1].value), grid, opts);
    }
    return sweep_thm23(KummerParams{p[0].value, p[1].value}, grid, opts);
}

}  // namespace

std::optional<Counterexample> search_counterexample(const SearchSpec& spec, std::uint64_t seed,
                                                    std::size_t budget, const Grid& grid,
                                                    const SweepOptions& opts) {
    if (budget < 1) throw ParamError("budget must be positive");
    grid.validate();
    const auto names = search_param_names(spec);
    if (spec.theorem_id == "2.1") thm21_direction(spec.direction);
    if (spec.theorem_id == "2.4") thm24_direction(spec.direction);

    std::vector<ParamRange> ranges;
    for (const auto& name : names) {
        const auto it = std::find_if(spec.box.begin(), spec.box.end(),
                                     [&](const ParamRange& r) { return r.name == name; });
        if (it == spec.box.end()) throw ParamError("box is missing parameter '" + name + "'");
        ranges.push_back(*it);
    }

    SweepOptions sample_opts = opts;
    sample_opts.override_region = true;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < budget; ++i) {
        std::vector<Param> params;
        for (const auto& range : ranges) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            params.push_back({range.name, range.lo + u * (range.hi - range.lo)});
        }
        SweepReport report;
        try {
            report = sweep_sample(spec, params, grid, sample_opts);
        } catch (const ParamError&) {
            continue;
        }
        for (const auto& rec : report.records) {
            if (rec.verdict == Verdict::Violated) return Counterexample{params, rec, i};
        }
    }
    return std::nullopt;
}

}  // namespace landenkit::verify
