#include "freezing/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "freezing/errors.hpp"
#include "freezing/special.hpp"

namespace freezing {

void apply_sign_convention(Eigen::Ref<Eigen::VectorXd> v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::fabs(v(i)) > 1e-10) {
            if (v(i) < 0.0) v = -v;
            return;
        }
    }
}

SpectralDecomposition symmetric_eigendecompose(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw ShapeError("symmetric_eigendecompose: matrix must be square");
    const Eigen::Index n = m.rows();
    Eigen::MatrixXd a = m;
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

    const double scale = a.norm();
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr int kMaxSweeps = 100;

    bool converged = n <= 1 || scale == 0.0;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        double off = 0.0;
        for (Eigen::Index q = 1; q < n; ++q) {
            for (Eigen::Index p = 0; p < q; ++p) off += a(p, q) * a(p, q);
        }
        if (std::sqrt(off) <= eps * scale) {
            converged = true;
            break;
        }
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::fabs(theta) + std::hypot(theta, 1.0));
                const double c = 1.0 / std::hypot(t, 1.0);
                const double s = t * c;
                // A <- G^T A G with G = [[c, s], [-s, c]] in the (p, q) plane
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (!converged) throw ConvergenceError("symmetric_eigendecompose: sweep budget exhausted");

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(), [&a](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });

    SpectralDecomposition out{Eigen::VectorXd(n), Eigen::MatrixXd(n, n)};
    for (Eigen::Index k = 0; k < n; ++k) {
        out.eigenvalues(k) = a(order[k], order[k]);
        out.eigenvectors.col(k) = v.col(order[k]);
        apply_sign_convention(out.eigenvectors.col(k));
    }
    return out;
}

std::vector<double> closed_form_spectrum(const EnsembleParams& params) {
    const int n = params.n();
    const double top = 2.0 * n + params.alpha() + params.beta() + 1.0;
    std::vector<double> lambda(n);
    for (int k = 1; k <= n; ++k) lambda[k - 1] = 2.0 * k * (top - k);
    return lambda;
}

DiscreteOPBasis::DiscreteOPBasis(const FreezePoint& freeze)
    : nodes_(freeze.z().begin(), freeze.z().end()) {
    const int n = static_cast<int>(nodes_.size());
    weights_.resize(n);
    for (int j = 0; j < n; ++j) weights_[j] = 1.0 - nodes_[j] * nodes_[j];

    const Eigen::Map<const Eigen::VectorXd> x(nodes_.data(), n);
    const Eigen::Map<const Eigen::VectorXd> w(weights_.data(), n);

    node_values_.resize(n, n);
    q0_ = 1.0 / std::sqrt(w.sum());
    node_values_.col(0).setConstant(q0_);

    diag_.resize(n);
    offdiag_.clear();
    Eigen::VectorXd prev = Eigen::VectorXd::Zero(n);
    double b_prev = 0.0;
    for (int k = 0; k < n; ++k) {
        const Eigen::VectorXd cur = node_values_.col(k);
        diag_[k] = (w.array() * x.array() * cur.array().square()).sum();
        if (k + 1 == n) break;
        Eigen::VectorXd next = (x.array() - diag_[k]) * cur.array() - b_prev * prev.array();
        const double b = std::sqrt((w.array() * next.array().square()).sum());
        if (!(b > 1e-14)) throw ConvergenceError("discrete OP basis: Stieltjes procedure broke down");
        next /= b;
        offdiag_.push_back(b);
        node_values_.col(k + 1) = next;
        prev = cur;
        b_prev = b;
    }
}

double DiscreteOPBasis::evaluate(int k, double x) const {
    if (k < 0 || k >= size()) throw DomainError("DiscreteOPBasis::evaluate: degree out of range");
    double q_prev = 0.0;
    double q = q0_;
    for (int m = 0; m < k; ++m) {
        const double b_m = m == 0 ? 0.0 : offdiag_[m - 1];
        const double next = ((x - diag_[m]) * q - b_m * q_prev) / offdiag_[m];
        q_prev = q;
        q = next;
    }
    return q;
}

Eigen::MatrixXd DiscreteOPBasis::gram() const {
    const Eigen::Map<const Eigen::VectorXd> w(weights_.data(), size());
    return node_values_.transpose() * w.asDiagonal() * node_values_;
}

DiscreteOPBasis build_discrete_op_basis(const FreezePoint& freeze) { return DiscreteOPBasis(freeze); }

std::vector<EigenvectorCheck> verify_eigenvectors(const PrecisionMatrix& s_tilde, const DiscreteOPBasis& basis) {
    if (s_tilde.coords != Coordinates::Trigonometric) {
        throw ShapeError("verify_eigenvectors: expects the trigonometric precision matrix");
    }
    const int n = s_tilde.n();
    if (basis.size() != n) throw ShapeError("verify_eigenvectors: basis size mismatch");

    const SpectralDecomposition numeric = symmetric_eigendecompose(s_tilde.entries);
    const std::vector<double> lambda = closed_form_spectrum(s_tilde.freeze.params());

    std::vector<EigenvectorCheck> report;
    report.reserve(n);
    for (int k = 1; k <= n; ++k) {
        Eigen::VectorXd u(n);
        for (int j = 0; j < n; ++j) u(j) = basis.node_values()(j, k - 1) * std::sqrt(basis.weights()[j]);
        u.normalize();
        apply_sign_convention(u);
        const double residual = (s_tilde.entries * u - lambda[k - 1] * u).norm();
        const double cosine = std::fabs(u.dot(numeric.eigenvectors.col(k - 1)));
        report.push_back({k, lambda[k - 1], residual, cosine});
    }
    return report;
}

double closed_form_log_det_algebraic(const EnsembleParams& params) {
    const int n = params.n();
    const double alpha = params.alpha();
    const double beta = params.beta();
    return log_factorial(n) - 3.0 * n * std::numbers::ln2 + 3.0 * log_pochhammer(n + alpha + beta + 1.0, n) -
           log_pochhammer(alpha + 1.0, n) - log_pochhammer(beta + 1.0, n);
}

double closed_form_log_det_trigonometric(const EnsembleParams& params) {
    const int n = params.n();
    return n * std::numbers::ln2 + log_factorial(n) +
           log_pochhammer(n + params.alpha() + params.beta() + 1.0, n);
}

LogDeterminant determinant_algebraic(const EnsembleParams& params) {
    const FreezePoint freeze(params);
    return {closed_form_log_det_algebraic(params), cholesky_log_det(build_algebraic(freeze).entries)};
}

LogDeterminant determinant_trigonometric(const EnsembleParams& params) {
    const FreezePoint freeze(params);
    return {closed_form_log_det_trigonometric(params), cholesky_log_det(build_trigonometric(freeze).entries)};
}

} // namespace freezing
