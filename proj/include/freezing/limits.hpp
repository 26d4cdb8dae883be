#pragma once

#include <vector>

#include <Eigen/Dense>

namespace freezing {

/// Hermite degeneration (alpha = beta -> infinity) of the algebraic precision
/// matrix: s_jj = 1 + sum_{l!=j} (z_j - z_l)^-2, s_ij = -(z_i - z_j)^-2 over
/// the zeros of the physicists' H_N.
struct HermiteLimit {
    int n;
    std::vector<double> zeros;
    Eigen::MatrixXd matrix;
};

/// Laguerre degeneration (alpha -> infinity, beta fixed):
/// s_jj = (beta+1)/z_j^2 + 2 sum_{l!=j} (z_j - z_l)^-2, s_ij = -2 (z_i - z_j)^-2
/// over the zeros of L_N^(beta).
struct LaguerreLimit {
    int n;
    double beta;
    std::vector<double> zeros;
    Eigen::MatrixXd matrix;
};

HermiteLimit build_hermite_limit(int n);
LaguerreLimit build_laguerre_limit(int n, double beta);

/// z_j - sum_{l!=j} 1/(z_j - z_l); zero at the Hermite zeros.
std::vector<double> hermite_stationarity(const std::vector<double>& zeros);

/// (beta+1)/z_j - 1 + 2 sum_{l!=j} 1/(z_j - z_l); zero at the zeros of L_N^(beta)
/// (follows from x y'' + (beta + 1 - x) y' + N y = 0 evaluated at a zero).
std::vector<double> laguerre_stationarity(const std::vector<double>& zeros, double beta);

struct LimitDistance {
    double alpha;
    double matrix_distance;  // relative Frobenius distance of the scaled Jacobi matrix
    double zero_distance;    // max_j |scaled z_j^(alpha) - z_j^limit|
};

/// For each alpha: || S^(alpha)/alpha - S^H ||_F / ||S^H||_F and
/// max_j |sqrt(alpha) z_j^(alpha) - z_j^H|, with S^(alpha) built from
/// a = 0, b = alpha + 1 (so the Jacobi exponents are alpha = beta).
std::vector<LimitDistance> hermite_convergence(int n, const std::vector<double>& alphas);

/// For each alpha: || (8/alpha^2) S^(alpha) - S^L ||_F / ||S^L||_F and
/// max_j |(alpha/2)(1 + z_j^(alpha)) - z_j^L|, with b = beta + 1 fixed and
/// a = alpha - beta.
std::vector<LimitDistance> laguerre_convergence(int n, double beta, const std::vector<double>& alphas);

} // namespace freezing
