#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "landenkit/regions.hpp"
#include "landenkit/specialfn.hpp"

namespace landenkit::verify {

using specialfn::BesselParams;
using specialfn::CoefficientSeries;
using specialfn::EvalConfig;
using specialfn::HyperTriple;
using specialfn::KummerParams;

/// Equally spaced moduli start, start + step, ... up to end (inclusive when
/// end - start is a multiple of step).  Requires 0 < start < end < 1,
/// step > 0 and at most 10^6 steps.
struct Grid {
    double start = 0.01;
    double end = 0.97;
    double step = 0.01;

    void validate() const;
    /// Points are rounded to 12 decimals so that 0.01 + 24 * 0.01 prints as 0.25.
    std::vector<double> points() const;
};

enum class Verdict { Holds, Violated, Indeterminate };
std::string_view to_string(Verdict v);

/// One grid point.  margin is oriented so that margin >= 0 certifies the
/// claimed inequality; |margin| <= margin_tol is Indeterminate.
struct InequalityRecord {
    double r = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    Verdict verdict = Verdict::Indeterminate;
};

struct Param {
    std::string name;
    double value = 0.0;
};

struct SweepReport {
    std::string theorem_id;
    std::vector<Param> params;
    Grid grid;
    std::vector<InequalityRecord> records;  // ordered by r
    double min_margin = 0.0;
    std::size_t n_violations = 0;
};

struct SweepOptions {
    EvalConfig eval;
    double margin_tol = 1e-10;
    /// Sweep even when the parameters miss the theorem's hypothesis.
    bool override_region = false;
};

Verdict classify_margin(double margin, double margin_tol);
InequalityRecord make_record(double r, double lhs, double rhs, double margin, double margin_tol);
/// Fills min_margin and n_violations from the records.
void summarize(SweepReport& report);

// Landen inequalities for F(a,b;c;.) with the elliptic quotient.
enum class Thm21Direction { Ineq1, Ineq2, Ineq3, Ineq4 };
std::string_view to_string(Thm21Direction d);

InequalityRecord thm21_point(const HyperTriple& t, Thm21Direction dir, double r,
                             const SweepOptions& opts = {});
/// Throws RegionMismatch unless the triple satisfies the branch the direction
/// needs (increasing quotient for ineq1/ineq2) or override_region is set.
SweepReport sweep_thm21(const HyperTriple& t, Thm21Direction dir, const Grid& grid = {},
                        const SweepOptions& opts = {});

// General power series f with lambda_f(x) = f(x^2).
enum class Thm22Direction { Ineq5, Reversed };
std::string_view to_string(Thm22Direction d);

constexpr std::size_t kMaxCoefficientWindow = 512;

/// Checks that {a_n omega_n} is monotone in the claimed direction from n = 0
/// over n <= window (for an explicit list: every listed coefficient plus the
/// first implicit zero).  Throws CoefficientMismatch otherwise.
void check_coefficient_window(const CoefficientSeries& f, Thm22Direction dir,
                              std::size_t window = kMaxCoefficientWindow);

InequalityRecord thm22_point(const CoefficientSeries& f, Thm22Direction dir, double r,
                             const SweepOptions& opts = {});
SweepReport sweep_thm22(const CoefficientSeries& f, Thm22Direction dir, const Grid& grid = {},
                        const SweepOptions& opts = {},
                        std::size_t window = kMaxCoefficientWindow);

// Bessel and Kummer series, reversed direction only.
using Thm23Params = std::variant<BesselParams, KummerParams>;

InequalityRecord thm23_point(const Thm23Params& params, double r, const SweepOptions& opts = {});
SweepReport sweep_thm23(const Thm23Params& params, const Grid& grid = {},
                        const SweepOptions& opts = {});

// Landen inequalities with the (1+r)^(2a) factor.
enum class Thm24Direction { Ineq6, Ineq7 };
std::string_view to_string(Thm24Direction d);

InequalityRecord thm24_point(const HyperTriple& t, Thm24Direction dir, double r,
                             const SweepOptions& opts = {});
SweepReport sweep_thm24(const HyperTriple& t, Thm24Direction dir, const Grid& grid = {},
                        const SweepOptions& opts = {});

/// F(a,b;2b;r^2) <= F(a, a+1/2-b; b+1/2; r^2).
bool ineq9_hypothesis(double a, double b);
InequalityRecord ineq9_point(double a, double b, double r, const SweepOptions& opts = {});
SweepReport sweep_ineq9(double a, double b, const Grid& grid = {}, const SweepOptions& opts = {});

enum class ElementaryCheck { Arcsin, LogPower };
std::string_view to_string(ElementaryCheck c);

/// Arcsin:   (sqrt(r)/2) asin(2 sqrt(r)/(1+r)) < asin(r)
/// LogPower: ((1+sqrt r)/(1-sqrt r))^sqrt(r) > (1+r)/(1-r)
InequalityRecord elementary_point(ElementaryCheck check, double r, double margin_tol = 1e-10);
SweepReport sweep_elementary(ElementaryCheck check, const Grid& grid = {},
                             double margin_tol = 1e-10);
std::array<SweepReport, 2> elementary_checks(const Grid& grid = {}, double margin_tol = 1e-10);

/// Numerator of the quotient x -> N(x) / F(1/2,1/2;1;x).
using Numerator = std::variant<HyperTriple, KummerParams, BesselParams, CoefficientSeries>;

/// Monotonicity of the quotient over the grid, read as arguments x.
regions::Monotonicity quotient_probe(const Numerator& numerator, const Grid& grid = {},
                                     const EvalConfig& cfg = {});

struct ParamRange {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
};

/// theorem_id: "2.1" (direction ineq1..ineq4; a,b,c), "2.3" (bessel: kappa,
/// c_sign; kummer: p,q), "2.4" (ineq6, ineq7; a,b,c), "ineq9" (a,b).
struct SearchSpec {
    std::string theorem_id;
    std::string direction;
    std::vector<ParamRange> box;
};

/// Parses "a:lo:hi,b:lo:hi,..."; bounds accept fractions such as 1/2.
std::vector<ParamRange> parse_box(std::string_view text);

struct Counterexample {
    std::vector<Param> params;
    InequalityRecord record;
    std::size_t sample_index = 0;
};

/// Samples parameters uniformly in the box (seeded, sequential) and sweeps
/// the full grid for each sample, ignoring the theorem's hypothesis.
/// Returns the first Violated record, or nothing after `budget` samples.
/// Samples rejected with ParamError are skipped but count against the budget.
std::optional<Counterexample> search_counterexample(const SearchSpec& spec, std::uint64_t seed,
                                                    std::size_t budget, const Grid& grid = {},
                                                    const SweepOptions& opts = {});

/// Decimal or fraction ("1/2", "-3/4") to double.  Throws ParamError.
double parse_real(std::string_view text);

}  // namespace landenkit::verify
