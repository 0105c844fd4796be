#include "landenkit/regions.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>

#include "landenkit/errors.hpp"

namespace landenkit::regions {

namespace {

constexpr double kBoundaryTol = 1e-12;

double scale_of(double x, double y) { return std::max({1.0, std::abs(x), std::abs(y)}); }

// Non-strict x <= y, counting near-equalities as satisfied.
bool le(double x, double y) { return x <= y + kBoundaryTol * scale_of(x, y); }
bool eq(double x, double y) { return std::abs(x - y) <= kBoundaryTol * scale_of(x, y); }

// lo <= mid <= hi
bool chain(double lo, double mid, double hi) { return le(lo, mid) && le(mid, hi); }
bool chain_touches(double lo, double mid, double hi) { return eq(lo, mid) || eq(mid, hi); }

void require_admissible(const HyperTriple& t) {
    if (!t.admissible()) {
        throw ParamError("c = " + std::to_string(t.c) + " is zero or a negative integer");
    }
}

}  // namespace

std::string_view to_string(Branch b) {
    switch (b) {
        case Branch::IncreasingBranch: return "IncreasingBranch";
        case Branch::DecreasingBranch: return "DecreasingBranch";
        case Branch::Outside: return "Outside";
    }
    return "?";
}

namespace {

struct Thm21Parts {
    double sum, prod4, upper, lower;
    bool inc, dec;
};

Thm21Parts thm21_parts(const HyperTriple& t) {
    require_admissible(t);
    Thm21Parts p{};
    p.sum = t.a + t.b;
    p.prod4 = 4.0 * t.a * t.b;
    p.upper = std::max(1.0, t.c);
    p.lower = std::min(1.0, t.c);
    p.inc = le(t.c, p.sum) && le(p.upper, p.prod4);
    p.dec = le(p.sum, t.c) && le(p.prod4, p.lower);
    return p;
}

struct Thm24Condition {
    Branch branch;
    const char* label;
    double lo, mid, hi;
};

std::vector<Thm24Condition> thm24_conditions(const HyperTriple& t) {
    require_admissible(t);
    if (!(t.a > 0.0) || !(t.b > 0.0)) throw ParamError("requires a > 0 and b > 0");
    const double a = t.a;
    const double b2 = 2.0 * t.b;
    const double b6 = 6.0 * t.b;
    const double c = t.c;
    return {
        {Branch::IncreasingBranch, "2.4a: max{1,c} <= 2b <= a+1/2", std::max(1.0, c), b2, a + 0.5},
        {Branch::IncreasingBranch, "2.4a: c <= 2b <= a", c, b2, a},
        {Branch::IncreasingBranch, "2.4a: 3c <= 6b <= min{6a,4a+1}", 3.0 * c, b6,
         std::min(6.0 * a, 4.0 * a + 1.0)},
        {Branch::DecreasingBranch, "2.4b: a+1/2 <= 2b <= min{1,c}", a + 0.5, b2, std::min(1.0, c)},
        {Branch::DecreasingBranch, "2.4b: max{6a,4a+1} <= 6b <= 3c",
         std::max(6.0 * a, 4.0 * a + 1.0), b6, 3.0 * c},
    };
}

}  // namespace

RegionVerdict classify_thm21(const HyperTriple& t) {
    const auto p = thm21_parts(t);
    if (p.inc) {
        return {Branch::IncreasingBranch, "2.1a: a+b >= c and 4ab >= max{1,c}",
                p.dec || eq(p.sum, t.c) || eq(p.prod4, p.upper), ""};
    }
    if (p.dec) {
        return {Branch::DecreasingBranch, "2.1b: a+b <= c and 4ab <= min{1,c}",
                eq(p.sum, t.c) || eq(p.prod4, p.lower), ""};
    }
    return {};
}

bool thm21_holds(const HyperTriple& t, Branch branch) {
    const auto p = thm21_parts(t);
    switch (branch) {
        case Branch::IncreasingBranch: return p.inc;
        case Branch::DecreasingBranch: return p.dec;
        case Branch::Outside: return !p.inc && !p.dec;
    }
    return false;
}

RegionVerdict classify_thm24(const HyperTriple& t) {
    const auto conditions = thm24_conditions(t);
    const Thm24Condition* fired = nullptr;
    bool other_branch_holds = false;
    for (const auto& cond : conditions) {
        if (!chain(cond.lo, cond.mid, cond.hi)) continue;
        if (fired == nullptr) {
            fired = &cond;
        } else if (cond.branch != fired->branch) {
            other_branch_holds = true;
        }
    }
    if (fired == nullptr) return {};
    return {fired->branch, fired->label,
            other_branch_holds || chain_touches(fired->lo, fired->mid, fired->hi), ""};
}

bool thm24_holds(const HyperTriple& t, Branch branch) {
    bool any = false;
    for (const auto& cond : thm24_conditions(t)) {
        if (!chain(cond.lo, cond.mid, cond.hi)) continue;
        if (cond.branch == branch) return true;
        any = true;
    }
    return branch == Branch::Outside && !any;
}

RegionVerdict classify_bessel(const BesselParams& bp) {
    if (!bp.admissible()) {
        throw ParamError("kappa = " + std::to_string(bp.kappa()) + " is zero or a negative integer");
    }
    const double kappa = bp.kappa();
    const double c = bp.c_sign();
    const double tail = std::max(-c, -(c + 1.0) / 4.0);
    const double strict_bound = std::max(0.0, tail);
    const double lax_bound = std::max(-1.0, tail);
    const bool strict = le(strict_bound, kappa);
    const bool lax = le(lax_bound, kappa);

    const std::string lax_note = std::string("lax bound kappa >= max{-1,-c,-(c+1)/4} ") +
                                 (lax ? "holds" : "fails");
    if (strict) {
        return {Branch::DecreasingBranch, "2.3: kappa >= max{0,-c,-(c+1)/4}",
                eq(strict_bound, kappa), lax_note};
    }
    return {Branch::Outside, "", false, lax_note};
}

RegionVerdict classify_kummer(const KummerParams& kp) {
    if (!kp.admissible()) {
        throw ParamError("q = " + std::to_string(kp.q) + " is zero or a negative integer");
    }
    const double bound = std::max({0.0, 4.0 * kp.p, kp.p + 0.75});
    if (le(bound, kp.q)) {
        return {Branch::DecreasingBranch, "2.3: q >= max{0,4p,p+3/4}", eq(bound, kp.q), ""};
    }
    return {};
}

double delta_n(const HyperTriple& t, std::size_t n) {
    const double k = static_cast<double>(n);
    const double excess = t.a + t.b - t.c;
    const double ab = t.a * t.b;
    return excess * k * k + (excess + ab - 0.25) * k + ab - t.c / 4.0;
}

double omega_seq(std::size_t n) {
    double ratio = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double kk = static_cast<double>(k);
        ratio *= (kk + 1.0) / (kk + 0.5);
    }
    return ratio * ratio;
}

double omega_seq_gamma(std::size_t n) {
    const double k = static_cast<double>(n);
    return std::numbers::pi * std::exp(2.0 * (std::lgamma(k + 1.0) - std::lgamma(k + 0.5)));
}

std::string_view to_string(SeqId id) {
    switch (id) {
        case SeqId::Alpha: return "alpha";
        case SeqId::Beta: return "beta";
        case SeqId::Gamma: return "gamma";
        case SeqId::Omega: return "omega";
        case SeqId::Delta: return "delta";
    }
    return "?";
}

std::string_view to_string(Monotonicity m) {
    switch (m) {
        case Monotonicity::Increasing: return "Increasing";
        case Monotonicity::Decreasing: return "Decreasing";
        case Monotonicity::Constant: return "Constant";
        case Monotonicity::NonMonotone: return "NonMonotone";
    }
    return "?";
}

SeqId seq_id_from_string(std::string_view name) {
    for (auto id : {SeqId::Alpha, SeqId::Beta, SeqId::Gamma, SeqId::Omega, SeqId::Delta}) {
        if (to_string(id) == name) return id;
    }
    throw ParamError("unknown sequence '" + std::string(name) + "'");
}

MonotoneClass classify_monotone(std::span<const double> values, double rel_tol) {
    MonotoneClass out;
    int direction = 0;
    for (std::size_t n = 0; n + 1 < values.size(); ++n) {
        const double u = values[n];
        const double v = values[n + 1];
        const double diff = v - u;
        if (std::abs(diff) <= rel_tol * std::max(std::abs(u), std::abs(v))) continue;
        const int sign = diff > 0.0 ? 1 : -1;
        if (direction == 0) {
            direction = sign;
        } else if (sign != direction) {
            out.first_violation = n;
            out.classification = Monotonicity::NonMonotone;
            return out;
        }
    }
    out.classification = direction > 0   ? Monotonicity::Increasing
                         : direction < 0 ? Monotonicity::Decreasing
                                         : Monotonicity::Constant;
    return out;
}

std::vector<double> seq_values(SeqId id, const HyperTriple& p, std::size_t n_max) {
    auto require = [](double param, const char* what) {
        if (!specialfn::admissible_denominator(param)) {
            throw ParamError(std::string(what) + " = " + std::to_string(param) +
                             " is zero or a negative integer");
        }
    };
    switch (id) {
        case SeqId::Alpha:
        case SeqId::Beta: require(p.c, "c"); break;
        case SeqId::Gamma:
            require(2.0 * p.b, "2b");
            require(p.a + 0.5 - p.b, "a+1/2-b");
            break;
        case SeqId::Omega:
        case SeqId::Delta: break;
    }

    std::vector<double> values;
    values.reserve(n_max + 1);
    if (id == SeqId::Delta) {
        for (std::size_t n = 0; n <= n_max; ++n) values.push_back(delta_n(p, n));
        return values;
    }

    auto ratio = [&](double k) {
        switch (id) {
            case SeqId::Alpha:
                return (k + p.a) * (k + p.b) * (k + 1.0) / ((k + p.c) * (k + 0.5) * (k + 0.5));
            case SeqId::Beta: return (k + 2.0 * p.b) / (k + p.c);
            case SeqId::Gamma:
                return (k + p.b) * (k + p.b + 0.5) / ((k + 2.0 * p.b) * (k + p.a + 0.5 - p.b));
            case SeqId::Omega: {
                const double r = (k + 1.0) / (k + 0.5);
                return r * r;
            }
            case SeqId::Delta: break;
        }
        return 0.0;
    };
    double v = 1.0;
    values.push_back(v);
    for (std::size_t n = 0; n < n_max; ++n) {
        v *= ratio(static_cast<double>(n));
        values.push_back(v);
    }
    return values;
}

SeqProbe seq_probe(SeqId id, const HyperTriple& params, std::size_t n_max) {
    if (n_max < 1 || n_max > 10000) throw ParamError("n_max must lie in [1, 10000]");
    const auto values = seq_values(id, params, n_max);
    const auto cls = classify_monotone(values);
    return {id, params, n_max, cls.classification, cls.first_violation};
}

}  // namespace landenkit::regions
