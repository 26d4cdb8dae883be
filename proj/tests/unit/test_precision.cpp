#include <cmath>

#include "doctest.h"

#include "freezing/errors.hpp"
#include "freezing/precision.hpp"
#include "freezing/spectral.hpp"

using namespace freezing;

TEST_CASE("precision matrices: N = 2, alpha = beta = 0") {
    const FreezePoint fp(EnsembleParams(2, 0.0, 1.0));
    const PrecisionMatrix s = build_algebraic(fp);
    CHECK(s.coords == Coordinates::Algebraic);
    CHECK(s.entries(0, 0) == doctest::Approx(3.75));
    CHECK(s.entries(1, 1) == doctest::Approx(3.75));
    CHECK(s.entries(0, 1) == doctest::Approx(-0.75));
    CHECK(s.entries(1, 0) == s.entries(0, 1));
    CHECK(s.entries.determinant() == doctest::Approx(13.5));

    const PrecisionMatrix st = build_trigonometric(fp);
    CHECK(st.coords == Coordinates::Trigonometric);
    CHECK(st.entries(0, 0) == doctest::Approx(10.0));
    CHECK(st.entries(1, 1) == doctest::Approx(10.0));
    CHECK(st.entries(0, 1) == doctest::Approx(-2.0));
    CHECK(st.entries.determinant() == doctest::Approx(96.0));

    const Eigen::MatrixXd sigma = invert_to_covariance(s);
    CHECK(sigma(0, 0) == doctest::Approx(3.75 / 13.5));
    CHECK(sigma(0, 1) == doctest::Approx(0.75 / 13.5));
    CHECK(sigma(0, 1) == sigma(1, 0));
}

TEST_CASE("precision matrices: N = 1, a = b = 1") {
    const FreezePoint fp(EnsembleParams(1, 1.0, 1.0));
    CHECK(build_algebraic(fp).entries(0, 0) == doctest::Approx(27.0 / 16.0));
    CHECK(build_trigonometric(fp).entries(0, 0) == doctest::Approx(6.0));
}

TEST_CASE("cross relation and symmetry over a parameter sweep") {
    for (int n : {1, 3, 9, 32}) {
        for (auto [a, b] : {std::pair{0.0, 1.0}, {1.0, 1.0}, {2.0, 0.5}, {0.5, 3.0}}) {
            const FreezePoint fp(EnsembleParams(n, a, b));
            const PrecisionMatrix s = build_algebraic(fp);
            const PrecisionMatrix st = build_trigonometric(fp);
            CHECK(s.entries == s.entries.transpose());
            CHECK(st.entries == st.entries.transpose());
            CHECK(cross_relation_residual(s, st) <= 1e-12 * st.entries.cwiseAbs().maxCoeff());
            // Off-diagonal entries are negative, diagonal dominates.
            for (int i = 0; i < n; ++i) {
                double off = 0.0;
                for (int j = 0; j < n; ++j) {
                    if (i != j) {
                        CHECK(s.entries(i, j) < 0.0);
                        off += std::fabs(s.entries(i, j));
                    }
                }
                CHECK(s.entries(i, i) > off);
            }
        }
    }
}

TEST_CASE("cross relation rejects mismatched inputs") {
    const FreezePoint f2(EnsembleParams(2, 0.0, 1.0));
    const FreezePoint f3(EnsembleParams(3, 0.0, 1.0));
    CHECK_THROWS_AS(cross_relation_residual(build_algebraic(f2), build_trigonometric(f3)), ShapeError);
    CHECK_THROWS_AS(cross_relation_residual(build_trigonometric(f2), build_algebraic(f2)), ShapeError);
}

TEST_CASE("determinant closed forms agree with Cholesky") {
    for (int n : {1, 2, 7, 40}) {
        for (auto [a, b] : {std::pair{0.0, 1.0}, {2.0, 0.5}, {0.5, 3.0}}) {
            const EnsembleParams p(n, a, b);
            const LogDeterminant ds = determinant_algebraic(p);
            const LogDeterminant dt = determinant_trigonometric(p);
            CHECK(std::fabs(ds.closed_form - ds.numerical) <= 1e-11 * n);
            CHECK(std::fabs(dt.closed_form - dt.numerical) <= 1e-11 * n);
            CHECK(closed_form_log_det_algebraic(p) == ds.closed_form);
            CHECK(closed_form_log_det_trigonometric(p) == dt.closed_form);
        }
    }
    CHECK(std::exp(closed_form_log_det_algebraic(EnsembleParams(2, 0.0, 1.0))) == doctest::Approx(13.5).epsilon(1e-14));
    CHECK(std::exp(closed_form_log_det_trigonometric(EnsembleParams(2, 0.0, 1.0))) == doctest::Approx(96.0).epsilon(1e-14));
}

TEST_CASE("covariance inverts the precision matrix") {
    const FreezePoint fp(EnsembleParams(12, 1.0, 2.0));
    for (const PrecisionMatrix& m : {build_algebraic(fp), build_trigonometric(fp)}) {
        const Eigen::MatrixXd sigma = invert_to_covariance(m);
        CHECK(sigma == sigma.transpose());
        CHECK((m.entries * sigma - Eigen::MatrixXd::Identity(12, 12)).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("cholesky_log_det rejects indefinite input") {
    Eigen::MatrixXd m(2, 2);
    m << 1.0, 2.0, 2.0, 1.0;
    CHECK_THROWS_AS(cholesky_log_det(m), ConvergenceError);
    CHECK(cholesky_log_det(Eigen::MatrixXd::Identity(3, 3) * 2.0) == doctest::Approx(3.0 * std::log(2.0)));
}

TEST_CASE("coordinate names") {
    CHECK(std::string(to_string(Coordinates::Algebraic)) == "algebraic");
    CHECK(std::string(to_string(Coordinates::Trigonometric)) == "trigonometric");
}
