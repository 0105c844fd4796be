#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "landenkit/specialfn.hpp"

namespace landenkit::regions {

using specialfn::BesselParams;
using specialfn::HyperTriple;
using specialfn::KummerParams;

enum class Branch { IncreasingBranch, DecreasingBranch, Outside };

std::string_view to_string(Branch b);

/// Which hypothesis set a parameter point satisfies.  `fired_condition` is
/// empty exactly when branch == Outside.  `boundary` is set when one of the
/// fired condition's inequalities holds with equality (within 1e-12), or
/// when both branches hold at once.  `note` carries secondary findings such
/// as the outcome of the alternative kappa bound for the Bessel case.
struct RegionVerdict {
    Branch branch = Branch::Outside;
    std::string fired_condition;
    bool boundary = false;
    std::string note;
};

/// a+b >= c, 4ab >= max{1,c} (increasing quotient) or a+b <= c,
/// 4ab <= min{1,c} (decreasing).  Ties go to IncreasingBranch.
RegionVerdict classify_thm21(const HyperTriple& t);

/// The five sub-conditions comparing 2b against a and c; a, b > 0 required.
RegionVerdict classify_thm24(const HyperTriple& t);

/// Whether the hypothesis of the given branch holds, independent of the
/// tie-breaking done by the classifiers.
bool thm21_holds(const HyperTriple& t, Branch branch);
bool thm24_holds(const HyperTriple& t, Branch branch);

/// DecreasingBranch iff kappa >= max{0, -c, -(c+1)/4}.  The weaker bound
/// with -1 in place of 0 is evaluated too and reported in `note`.
RegionVerdict classify_bessel(const BesselParams& bp);

/// DecreasingBranch iff q >= max{0, 4p, p + 3/4}.
RegionVerdict classify_kummer(const KummerParams& kp);

/// (a+b-c) n^2 + (a+b-c+ab-1/4) n + ab - c/4; its sign is the sign of
/// alpha_{n+1}/alpha_n - 1 whenever n + c > 0.
double delta_n(const HyperTriple& t, std::size_t n);

/// omega_n = [(1)_n / (1/2)_n]^2 by running product.
double omega_seq(std::size_t n);

/// pi [Gamma(n+1) / Gamma(n+1/2)]^2 through log-gamma.
double omega_seq_gamma(std::size_t n);

enum class SeqId { Alpha, Beta, Gamma, Omega, Delta };
enum class Monotonicity { Increasing, Decreasing, Constant, NonMonotone };

std::string_view to_string(SeqId id);
std::string_view to_string(Monotonicity m);
SeqId seq_id_from_string(std::string_view name);

struct MonotoneClass {
    Monotonicity classification = Monotonicity::Constant;
    /// Index n of the first comparison (v_n, v_{n+1}) against the direction
    /// set by the first strict comparison.
    std::optional<std::size_t> first_violation;
};

/// Classifies a finite sequence by consecutive comparisons; two values are
/// equal when |v_{n+1} - v_n| <= rel_tol * max(|v_n|, |v_{n+1}|).
MonotoneClass classify_monotone(std::span<const double> values, double rel_tol = 1e-12);

struct SeqProbe {
    SeqId seq_id = SeqId::Alpha;
    HyperTriple params;
    std::size_t n_max = 0;
    Monotonicity classification = Monotonicity::Constant;
    std::optional<std::size_t> first_violation;
};

/// Values v_0..v_{n_max} of a proof sequence.  Parameters are read from the
/// triple: alpha, delta use (a,b,c); beta uses (b,c): (2b)_n/(c)_n; gamma uses
/// (a,b): (b)_n (b+1/2)_n / ((2b)_n (a+1/2-b)_n); omega ignores them.
std::vector<double> seq_values(SeqId id, const HyperTriple& params, std::size_t n_max);

/// Monotonicity of a proof sequence over n in [0, n_max], n_max <= 10000.
SeqProbe seq_probe(SeqId id, const HyperTriple& params, std::size_t n_max);

}  // namespace landenkit::regions
