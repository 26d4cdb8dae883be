#pragma once

#include <vector>

#include <Eigen/Dense>

#include "freezing/precision.hpp"

namespace freezing {

/// Eigenvalues ascending; column k of `eigenvectors` is the unit eigenvector
/// of eigenvalue k, signed so that its first non-negligible component is
/// positive.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
};

/// Full eigendecomposition of a symmetric matrix by the cyclic Jacobi
/// rotation method. Only the upper triangle is trusted to be consistent with
/// the lower one; the input must be symmetric. Throws ConvergenceError after
/// 100 sweeps.
SpectralDecomposition symmetric_eigendecompose(const Eigen::MatrixXd& m);

/// Flips v in place so that its first component with |v_i| > 1e-10 is positive.
void apply_sign_convention(Eigen::Ref<Eigen::VectorXd> v);

/// lambda_k = 2k(2N + alpha + beta + 1 - k), k = 1..N (ascending).
std::vector<double> closed_form_spectrum(const EnsembleParams& params);

/// Polynomials q_0..q_{N-1} orthonormal for the discrete measure
/// sum_j (1 - z_j^2) delta_{z_j}, built by the Stieltjes procedure.
///
/// Recurrence (orthonormal form):
///   b_{k+1} q_{k+1}(x) = (x - a_k) q_k(x) - b_k q_{k-1}(x),  q_0 = 1/sqrt(sum w_j).
/// Leading coefficients are positive.
class DiscreteOPBasis {
public:
    explicit DiscreteOPBasis(const FreezePoint& freeze);

    int size() const noexcept { return static_cast<int>(nodes_.size()); }
    const std::vector<double>& nodes() const noexcept { return nodes_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    /// a_0..a_{N-1}
    const std::vector<double>& diag() const noexcept { return diag_; }
    /// b_1..b_{N-1} (all strictly positive)
    const std::vector<double>& offdiag() const noexcept { return offdiag_; }
    double q0() const noexcept { return q0_; }

    /// q_k(x) by the recurrence, 0 <= k < N.
    double evaluate(int k, double x) const;

    /// q_k(z_j) as produced by the Stieltjes sweep; (j, k) entry.
    const Eigen::MatrixXd& node_values() const noexcept { return node_values_; }

    /// Gram matrix sum_j q_l(z_j) q_k(z_j) w_j, identity up to rounding.
    Eigen::MatrixXd gram() const;

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
    std::vector<double> diag_;
    std::vector<double> offdiag_;
    double q0_ = 0.0;
    Eigen::MatrixXd node_values_;
};

DiscreteOPBasis build_discrete_op_basis(const FreezePoint& freeze);

struct EigenvectorCheck {
    int k;               // 1-based index
    double eigenvalue;   // closed-form lambda_k
    double residual;     // ||S~ u_k - lambda_k u_k||
    double cosine;       // |<u_k, v_k>| against the numerical eigenvector
};

/// Forms u_k = (q_{k-1}(z_j) sqrt(1 - z_j^2))_j, normalizes it and compares
/// it with the k-th numerical eigenvector of S~.
std::vector<EigenvectorCheck> verify_eigenvectors(const PrecisionMatrix& s_tilde, const DiscreteOPBasis& basis);

struct LogDeterminant {
    double closed_form;
    double numerical;
};

/// det S = N!/2^{3N} ((N+alpha+beta+1)_N)^3 / ((alpha+1)_N (beta+1)_N) against Cholesky.
LogDeterminant determinant_algebraic(const EnsembleParams& params);

/// det S~ = 2^N N! (N+alpha+beta+1)_N against Cholesky.
LogDeterminant determinant_trigonometric(const EnsembleParams& params);

double closed_form_log_det_algebraic(const EnsembleParams& params);
double closed_form_log_det_trigonometric(const EnsembleParams& params);

} // namespace freezing
