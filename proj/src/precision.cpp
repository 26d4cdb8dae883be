#include "freezing/precision.hpp"

#include <cmath>

#include "freezing/errors.hpp"

namespace freezing {

const char* to_string(Coordinates c) noexcept {
    return c == Coordinates::Algebraic ? "algebraic" : "trigonometric";
}

PrecisionMatrix build_algebraic(const FreezePoint& freeze) {
    const int n = freeze.n();
    const auto z = freeze.z();
    const double upper = 0.5 * (freeze.params().a() + freeze.params().b());
    const double lower = 0.5 * freeze.params().b();

    Eigen::MatrixXd s(n, n);
    for (int j = 0; j < n; ++j) {
        double diag = upper / ((1.0 - z[j]) * (1.0 - z[j])) + lower / ((1.0 + z[j]) * (1.0 + z[j]));
        for (int l = 0; l < n; ++l) {
            if (l == j) continue;
            const double d = z[j] - z[l];
            diag += 1.0 / (d * d);
        }
        s(j, j) = diag;
        for (int i = j + 1; i < n; ++i) {
            const double d = z[i] - z[j];
            s(i, j) = s(j, i) = -1.0 / (d * d);
        }
    }
    return {Coordinates::Algebraic, std::move(s), freeze};
}

PrecisionMatrix build_trigonometric(const FreezePoint& freeze) {
    const int n = freeze.n();
    const auto z = freeze.z();
    const double a = freeze.params().a();
    const double b = freeze.params().b();

    Eigen::MatrixXd s(n, n);
    for (int j = 0; j < n; ++j) {
        const double w_j = 1.0 - z[j] * z[j];
        double diag = 2.0 * (a + b) * (1.0 + z[j]) / (1.0 - z[j]) + 2.0 * b * (1.0 - z[j]) / (1.0 + z[j]);
        for (int l = 0; l < n; ++l) {
            if (l == j) continue;
            const double d = z[j] - z[l];
            diag += 4.0 * w_j / (d * d);
        }
        s(j, j) = diag;
        for (int i = j + 1; i < n; ++i) {
            const double d = z[i] - z[j];
            s(i, j) = s(j, i) = -4.0 * std::sqrt(w_j * (1.0 - z[i] * z[i])) / (d * d);
        }
    }
    return {Coordinates::Trigonometric, std::move(s), freeze};
}

double cross_relation_residual(const PrecisionMatrix& algebraic, const PrecisionMatrix& trigonometric) {
    if (algebraic.coords != Coordinates::Algebraic || trigonometric.coords != Coordinates::Trigonometric) {
        throw ShapeError("cross_relation_residual: expects (algebraic, trigonometric) matrices");
    }
    if (algebraic.n() != trigonometric.n() || algebraic.n() != algebraic.freeze.n()) {
        throw ShapeError("cross_relation_residual: dimension mismatch");
    }
    const auto z = algebraic.freeze.z();
    const int n = algebraic.n();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double factor = 4.0 * std::sqrt((1.0 - z[i] * z[i]) * (1.0 - z[j] * z[j]));
            worst = std::max(worst, std::fabs(trigonometric.entries(i, j) - factor * algebraic.entries(i, j)));
        }
    }
    return worst;
}

Eigen::MatrixXd invert_to_covariance(const PrecisionMatrix& p) {
    const Eigen::LLT<Eigen::MatrixXd> llt(p.entries);
    if (llt.info() != Eigen::Success) {
        throw ConvergenceError("invert_to_covariance: precision matrix is not positive definite");
    }
    Eigen::MatrixXd sigma = llt.solve(Eigen::MatrixXd::Identity(p.n(), p.n()));
    // symmetrize away the solve's rounding asymmetry
    return 0.5 * (sigma + sigma.transpose());
}

double cholesky_log_det(const Eigen::MatrixXd& m) {
    const Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success) {
        throw ConvergenceError("cholesky_log_det: matrix is not positive definite");
    }
    const auto diag = llt.matrixLLT().diagonal();
    return 2.0 * diag.array().log().sum();
}

} // namespace freezing
