#include <doctest.h>

#include <cmath>
#include <random>

#include "landenkit/errors.hpp"
#include "landenkit/landen.hpp"

using namespace landenkit;
using namespace landenkit::landen;
using specialfn::EllipticMethod;
using specialfn::EvalConfig;

namespace {

constexpr double kKPhi05 = 2.52862553221889406431;  // K(phi(0.5)) = 1.5 K(0.5)

std::vector<double> default_grid() {
    std::vector<double> r;
    for (int i = 1; i <= 97; ++i) r.push_back(i / 100.0);
    return r;
}

}  // namespace

TEST_CASE("phi_ascend") {
    CHECK(phi_ascend(0.0) == 0.0);
    CHECK(phi_ascend(1.0) == 1.0);
    CHECK(phi_ascend(1.0 / 3.0) == doctest::Approx(0.8660254037844386).epsilon(1e-15));
    CHECK(phi_ascend(0.25) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK_THROWS_AS(phi_ascend(-0.1), DomainError);
    CHECK_THROWS_AS(phi_ascend(1.1), DomainError);
}

TEST_CASE("psi_descend") {
    CHECK(psi_descend(0.0) == 1.0);
    CHECK(psi_descend(1.0 / 3.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(psi_descend(psi_descend(0.37)) - 0.37) <= 1e-15);
    CHECK_THROWS_AS(psi_descend(2.0), DomainError);
}

TEST_CASE("property: psi_descend is an involution and phi maps into [0,1]") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double r = u(rng);
        CHECK(std::abs(psi_descend(psi_descend(r)) - r) <= 4e-16);
        const double p = phi_ascend(r);
        CHECK(p >= r);
        CHECK(p <= 1.0);
    }
}

TEST_CASE("first identity") {
    const auto res = check_identity_first(0.5);
    CHECK(std::abs(res.lhs - kKPhi05) / kKPhi05 < 1e-13);
    CHECK(res.rel_residual <= 1e-9);
    CHECK(check_identity_first(1e-6).rel_residual <= 1e-9);
    CHECK_THROWS_AS(check_identity_first(0.0), DomainError);
    CHECK_THROWS_AS(check_identity_first(1.0), DomainError);
}

TEST_CASE("second identity") {
    CHECK(check_identity_second(0.6).rel_residual <= 1e-9);
    CHECK(check_identity_second(0.999).rel_residual <= 1e-9);
    CHECK_THROWS_AS(check_identity_second(-0.5), DomainError);
}

TEST_CASE("identities over the grid, both methods") {
    EvalConfig cfg;
    for (double r : default_grid()) {
        CHECK(check_identity_first(r, cfg, EllipticMethod::Agm).rel_residual <= 1e-9);
        CHECK(check_identity_second(r, cfg, EllipticMethod::Agm).rel_residual <= 1e-9);
        CHECK(check_identity_first(r, cfg, EllipticMethod::Series).rel_residual <= 1e-8);
        CHECK(check_identity_second(r, cfg, EllipticMethod::Series).rel_residual <= 1e-8);
    }
}

TEST_CASE("generalized transformation") {
    const auto half = check_transf(0.5, 0.5, 0.5);
    CHECK(half.rel_residual <= 1e-9);
    const auto closed = check_transf(1.0, 0.5, 0.5);
    CHECK(closed.lhs == doctest::Approx(3.0).epsilon(1e-11));
    CHECK(closed.rhs == doctest::Approx(3.0).epsilon(1e-11));
    CHECK(closed.rel_residual <= 1e-12);
    CHECK_THROWS_AS(check_transf(1.0, 0.0, 0.5), ParamError);
    CHECK_THROWS_AS(check_transf(1.0, -1.0, 0.5), ParamError);
    CHECK_THROWS_AS(check_transf(1.0, 0.5, 1.0), DomainError);
}

TEST_CASE("complementary transformation") {
    const auto res = check_transf_complement(1.0, 0.5, 0.8);
    CHECK(res.lhs == doctest::Approx(1.25).epsilon(1e-11));
    CHECK(res.rel_residual <= 1e-10);
    CHECK(check_transf_complement(0.7, 0.4, 0.999).rel_residual <= 1e-10);
}

TEST_CASE("property: transformation residuals for random (a, b)") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 30; ++i) {
        const double a = 2.0 * (1.0 - u(rng));
        const double b = 2.0 * (1.0 - u(rng));
        for (int k = 1; k <= 18; ++k) {
            const double r = 0.05 * k;
            CHECK(check_transf(a, b, r).rel_residual <= 1e-8);
            CHECK(check_transf_complement(a, b, r).rel_residual <= 1e-8);
        }
    }
}

TEST_CASE("slow convergence is reported") {
    EvalConfig cfg;
    cfg.max_terms = 3;
    CHECK_THROWS_AS(check_transf(0.7, 0.3, 0.6, cfg), SlowConvergence);
}
