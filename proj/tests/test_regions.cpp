#include <doctest.h>

#include <cmath>
#include <random>

#include "landenkit/errors.hpp"
#include "landenkit/regions.hpp"

using namespace landenkit;
using namespace landenkit::regions;
using specialfn::BesselParams;

namespace {

void check_fired_invariant(const RegionVerdict& v) {
    CHECK(v.fired_condition.empty() == (v.branch == Branch::Outside));
}

}  // namespace

TEST_CASE("Landen inequality regions") {
    auto v = classify_thm21({1, 1, 1});
    CHECK(v.branch == Branch::IncreasingBranch);
    CHECK_FALSE(v.boundary);

    v = classify_thm21({0.5, 0.5, 1.5});
    CHECK(v.branch == Branch::DecreasingBranch);

    v = classify_thm21({0.5, 0.5, 1});
    CHECK(v.branch == Branch::IncreasingBranch);
    CHECK(v.boundary);

    v = classify_thm21({0.1, 0.1, 0.1});
    CHECK(v.branch == Branch::Outside);
    CHECK(v.fired_condition.empty());

    CHECK_THROWS_AS(classify_thm21({1, 1, 0}), ParamError);
    CHECK_THROWS_AS(classify_thm21({1, 1, -1}), ParamError);
}

TEST_CASE("regions for the (1+r)^(2a) inequalities") {
    auto v = classify_thm24({2, 1, 2});
    CHECK(v.branch == Branch::IncreasingBranch);
    CHECK(v.fired_condition == "2.4a: max{1,c} <= 2b <= a+1/2");

    v = classify_thm24({0.25, 0.5, 1.5});
    CHECK(v.branch == Branch::DecreasingBranch);
    CHECK(v.fired_condition == "2.4b: a+1/2 <= 2b <= min{1,c}");

    v = classify_thm24({0.5, 1, 1.5});
    CHECK(v.branch == Branch::Outside);

    v = classify_thm24({1, 0.5, 1});
    CHECK(v.branch == Branch::IncreasingBranch);
    CHECK(thm24_holds({1, 0.5, 1}, Branch::IncreasingBranch));

    CHECK_THROWS_AS(classify_thm24({-1, 0.5, 1}), ParamError);
    CHECK_THROWS_AS(classify_thm24({1, 0, 1}), ParamError);
}

TEST_CASE("classify_bessel") {
    auto v = classify_bessel(BesselParams::from_kappa(1, 4));
    CHECK(v.branch == Branch::DecreasingBranch);

    v = classify_bessel(BesselParams::from_kappa(1, -4));
    CHECK(v.branch == Branch::Outside);

    v = classify_bessel(BesselParams::from_kappa(-0.5, 0.5));
    CHECK(v.branch == Branch::Outside);
    CHECK(v.note.find("fails") != std::string::npos);

    // Passes only the weaker bound.
    v = classify_bessel(BesselParams::from_kappa(-0.5, 4));
    CHECK(v.branch == Branch::Outside);
    CHECK(v.note.find("holds") != std::string::npos);

    CHECK_THROWS_AS(classify_bessel(BesselParams::from_kappa(-2, 4)), ParamError);
}

TEST_CASE("classify_kummer") {
    auto v = classify_kummer({0.25, 1});
    CHECK(v.branch == Branch::DecreasingBranch);
    CHECK(v.boundary);

    CHECK(classify_kummer({1, 2}).branch == Branch::Outside);
    CHECK(classify_kummer({-1, 0.5}).branch == Branch::DecreasingBranch);
    CHECK_THROWS_AS(classify_kummer({1, 0}), ParamError);
}

TEST_CASE("property: classifiers agree with the raw conditions") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.01, 3.0);
    for (int i = 0; i < 2000; ++i) {
        const specialfn::HyperTriple t{u(rng), u(rng), u(rng)};
        const auto v21 = classify_thm21(t);
        check_fired_invariant(v21);
        const double s = t.a + t.b, p = 4 * t.a * t.b;
        const bool inc = s >= t.c && p >= std::max(1.0, t.c);
        const bool dec = s <= t.c && p <= std::min(1.0, t.c);
        if (inc) CHECK(v21.branch == Branch::IncreasingBranch);
        if (dec && !inc) CHECK(v21.branch == Branch::DecreasingBranch);
        if (!inc && !dec) CHECK(v21.branch == Branch::Outside);

        const auto v24 = classify_thm24(t);
        check_fired_invariant(v24);
        if (v24.branch != Branch::Outside) CHECK(thm24_holds(t, v24.branch));

        check_fired_invariant(classify_kummer({u(rng) - 1.5, u(rng)}));
    }
}

TEST_CASE("property: with c = a + b the increasing condition reduces to 4ab >= a + b") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.05, 3.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = u(rng), b = u(rng);
        const bool reduced = 4 * a * b >= std::max(1.0, a + b);
        CHECK(thm21_holds({a, b, a + b}, Branch::IncreasingBranch) == reduced);
    }
}

TEST_CASE("delta_n") {
    CHECK(delta_n({0.5, 0.5, 1}, 0) == 0.0);
    CHECK(delta_n({0.5, 0.5, 1}, 17) == 0.0);
    CHECK(delta_n({1, 1, 1}, 0) == doctest::Approx(0.75));
    CHECK(delta_n({0.1, 0.1, 0.1}, 1) == doctest::Approx(-0.055).epsilon(1e-12));
}

TEST_CASE("omega") {
    CHECK(omega_seq(0) == 1.0);
    CHECK(omega_seq(1) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(omega_seq(2) == doctest::Approx(64.0 / 9.0).epsilon(1e-15));
    for (std::size_t n : {0, 1, 2, 10, 100, 1000, 10000}) {
        CHECK(omega_seq_gamma(n) == doctest::Approx(omega_seq(n)).epsilon(1e-10));
    }
}

TEST_CASE("classify_monotone") {
    const std::vector<double> inc{1, 2, 3}, dec{3, 2, 1}, flat{1, 1, 1}, wiggle{1, 2, 2, 1, 3};
    CHECK(classify_monotone(inc).classification == Monotonicity::Increasing);
    CHECK(classify_monotone(dec).classification == Monotonicity::Decreasing);
    CHECK(classify_monotone(flat).classification == Monotonicity::Constant);
    const auto w = classify_monotone(wiggle);
    CHECK(w.classification == Monotonicity::NonMonotone);
    REQUIRE(w.first_violation.has_value());
    CHECK(*w.first_violation == 2);
}

TEST_CASE("seq_probe") {
    CHECK(seq_probe(SeqId::Alpha, {1, 1, 1}, 200).classification == Monotonicity::Increasing);
    CHECK(seq_probe(SeqId::Beta, {0.3, 0.7, 1.4}, 200).classification == Monotonicity::Constant);
    CHECK(seq_probe(SeqId::Gamma, {1, 0.5, 0}, 200).classification == Monotonicity::Decreasing);
    CHECK(seq_probe(SeqId::Omega, {}, 1000).classification == Monotonicity::Increasing);

    const auto p = seq_probe(SeqId::Alpha, {0.1, 0.1, 0.1}, 200);
    CHECK(p.classification == Monotonicity::NonMonotone);
    REQUIRE(p.first_violation.has_value());
    CHECK(*p.first_violation == 2);

    CHECK_THROWS_AS(seq_probe(SeqId::Alpha, {1, 1, 1}, 0), ParamError);
    CHECK_THROWS_AS(seq_probe(SeqId::Alpha, {1, 1, 1}, 10001), ParamError);
    CHECK_THROWS_AS(seq_probe(SeqId::Alpha, {1, 1, -2}, 10), ParamError);
    CHECK_THROWS_AS(seq_probe(SeqId::Gamma, {1, 0, 1}, 10), ParamError);
    CHECK_THROWS_AS(seq_id_from_string("zeta"), ParamError);
    CHECK(seq_id_from_string("delta") == SeqId::Delta);
}

TEST_CASE("property: alpha ratio minus one has the sign of delta_n") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.05, 3.0);
    for (int i = 0; i < 200; ++i) {
        const specialfn::HyperTriple t{u(rng), u(rng), u(rng)};
        const auto alpha = seq_values(SeqId::Alpha, t, 60);
        for (std::size_t n = 0; n < 60; ++n) {
            const double d = delta_n(t, n);
            const double step = alpha[n + 1] / alpha[n] - 1.0;
            if (std::abs(d) > 1e-9 * (1 + n * n)) CHECK((d > 0) == (step > 0));
        }
    }
}

TEST_CASE("property: in-region triples give monotone alpha") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.05, 3.0);
    int seen = 0;
    for (int i = 0; i < 5000 && seen < 200; ++i) {
        const specialfn::HyperTriple t{u(rng), u(rng), u(rng)};
        const auto v = classify_thm21(t);
        if (v.branch == Branch::Outside || v.boundary) continue;
        ++seen;
        const auto probe = seq_probe(SeqId::Alpha, t, 1000);
        const auto want = v.branch == Branch::IncreasingBranch ? Monotonicity::Increasing
                                                               : Monotonicity::Decreasing;
        CHECK((probe.classification == want || probe.classification == Monotonicity::Constant));
    }
    CHECK(seen >= 20);
}
