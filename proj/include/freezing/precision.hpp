#pragma once

#include <Eigen/Dense>

#include "freezing/freeze_point.hpp"

namespace freezing {

enum class Coordinates { Algebraic, Trigonometric };

const char* to_string(Coordinates c) noexcept;

/// Inverse covariance of the freezing CLT, either S (algebraic frame) or
/// S~ (trigonometric frame). Entries are filled for i <= j and mirrored, so
/// the stored matrix is exactly symmetric.
struct PrecisionMatrix {
    Coordinates coords;
    Eigen::MatrixXd entries;
    FreezePoint freeze;

    int n() const noexcept { return static_cast<int>(entries.rows()); }
};

/// s_jj = sum_{l!=j} (z_j-z_l)^-2 + (a+b)/2 (1-z_j)^-2 + b/2 (1+z_j)^-2,
/// s_ij = -(z_i-z_j)^-2.
PrecisionMatrix build_algebraic(const FreezePoint& freeze);

/// s~_jj = 4 sum_{l!=j} (1-z_j^2)/(z_j-z_l)^2 + 2(a+b)(1+z_j)/(1-z_j) + 2b(1-z_j)/(1+z_j),
/// s~_ij = -4 sqrt((1-z_i^2)(1-z_j^2))/(z_i-z_j)^2.
PrecisionMatrix build_trigonometric(const FreezePoint& freeze);

/// max_ij |s~_ij - 4 sqrt((1-z_i^2)(1-z_j^2)) s_ij|. Both matrices are built
/// independently from their own entry formulas, so this is a genuine check of
/// the change of variables x = cos(2t) at the freezing point.
/// Throws ShapeError on dimension mismatch or wrong coordinate tags.
double cross_relation_residual(const PrecisionMatrix& algebraic, const PrecisionMatrix& trigonometric);

/// Sigma = P^-1 through a Cholesky factorization. Throws ConvergenceError if
/// P is not numerically positive definite.
Eigen::MatrixXd invert_to_covariance(const PrecisionMatrix& p);

/// log det of a symmetric positive-definite matrix via Cholesky.
/// Throws ConvergenceError if the factorization fails.
double cholesky_log_det(const Eigen::MatrixXd& m);

} // namespace freezing
