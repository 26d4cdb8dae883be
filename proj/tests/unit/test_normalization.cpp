#include <cmath>
#include <numbers>

#include "doctest.h"

#include "../oracles/reference_values.hpp"
#include "freezing/errors.hpp"
#include "freezing/normalization.hpp"
#include "freezing/oracles.hpp"
#include "freezing/precision.hpp"

using namespace freezing;

TEST_CASE("Selberg constant against high-precision references") {
    for (const reference::SelbergCase& c : reference::selberg_cases) {
        const EnsembleParams p(c.n, c.a, c.b, c.kappa);
        CHECK(std::fabs(log_selberg_constant(p) + c.log_inverse_constant) <=
              1e-13 * std::max(1.0, std::fabs(c.log_inverse_constant)));
    }
}

TEST_CASE("Selberg constant against the Beta-function oracle for N = 1") {
    for (auto [a, b] : {std::pair{0.0, 1.0}, {1.0, 1.0}, {2.0, 0.5}, {0.5, 3.0}}) {
        for (double k : {0.3, 1.0, 7.5, 250.0}) {
            const EnsembleParams p(1, a, b, k);
            CHECK(log_selberg_constant(p) == doctest::Approx(-oracle::log_inverse_normalizer_beta(p)).epsilon(1e-12));
        }
    }
    // kappa = 1, a = 0, b = 1: density on [-1, 1] is uniform, so c = 1/2.
    CHECK(log_selberg_constant(EnsembleParams(1, 0.0, 1.0, 1.0)) == doctest::Approx(-std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("Selberg constant against quadrature for N = 2") {
    for (const EnsembleParams& p : {EnsembleParams(2, 0.0, 1.0, 2.0), EnsembleParams(2, 1.0, 1.0, 1.0),
                                    EnsembleParams(2, 2.0, 0.5, 1.0), EnsembleParams(2, 0.5, 3.0, 0.5)}) {
        CHECK(std::fabs(log_selberg_constant(p) + oracle::log_inverse_normalizer_quadrature(p)) < 1e-8);
    }
    CHECK_THROWS_AS(oracle::log_inverse_normalizer_quadrature(EnsembleParams(3, 0.0, 1.0)), DomainError);
}

TEST_CASE("limit constant: N = 1, a = b = 1") {
    // det S = 27/16, so C = sqrt(27/16) / sqrt(2 pi)
    CHECK(log_C_limit(EnsembleParams(1, 1.0, 1.0)) ==
          doctest::Approx(std::log(std::sqrt(27.0 / 16.0) / std::sqrt(2.0 * std::numbers::pi))).epsilon(1e-14));
}

TEST_CASE("Gaussian normalizer identity") {
    for (int n : {1, 2, 5, 30}) {
        for (auto [a, b] : {std::pair{0.0, 1.0}, {2.0, 0.5}}) {
            const EnsembleParams p(n, a, b);
            const double gauss = 0.5 * cholesky_log_det(build_algebraic(FreezePoint(p)).entries) -
                                 0.5 * n * std::log(2.0 * std::numbers::pi);
            CHECK(std::fabs(gauss - log_C_limit(p)) < 1e-11 * n);
        }
    }
}

TEST_CASE("C_kappa approaches the limit monotonically with a 1/kappa rate") {
    for (int n : {1, 3, 8}) {
        const EnsembleParams p(n, 1.0, 1.0);
        const FreezePoint fp(p);
        const double limit = log_C_limit(p);
        double prev = INFINITY;
        for (double k : {10.0, 100.0, 1000.0, 10000.0}) {
            const double gap = std::fabs(log_C_kappa(p.with_kappa(k), fp) - limit);
            CHECK(gap < prev);
            if (std::isfinite(prev)) CHECK(gap * 10.0 == doctest::Approx(prev).epsilon(0.1));
            prev = gap;
        }
    }
}

TEST_CASE("normalization report and shape checks") {
    const EnsembleParams p(3, 0.5, 3.0, 20.0);
    const NormalizationReport r = normalization_report(p);
    CHECK(r.log_c_kappa == log_selberg_constant(p));
    CHECK(r.log_C_kappa == log_C_kappa(p, FreezePoint(p)));
    CHECK(r.log_C_limit == log_C_limit(p));
    CHECK_THROWS_AS(log_C_kappa(p, FreezePoint(EnsembleParams(3, 0.5, 2.0))), ShapeError);
}
