#include "freezing/limits.hpp"

#include <algorithm>
#include <cmath>

#include "freezing/errors.hpp"
#include "freezing/freeze_point.hpp"
#include "freezing/precision.hpp"
#include "freezing/recurrence.hpp"

namespace freezing {
namespace {

// Off-diagonal -weight/(z_i - z_j)^2, diagonal = diag_term(j) + weight * sum_{l!=j} (z_j - z_l)^-2.
template <typename DiagTerm>
Eigen::MatrixXd interaction_matrix(const std::vector<double>& z, double weight, DiagTerm diag_term) {
    const int n = static_cast<int>(z.size());
    Eigen::MatrixXd s(n, n);
    for (int j = 0; j < n; ++j) {
        double d = diag_term(j);
        for (int l = 0; l < n; ++l) {
            if (l != j) d += weight / ((z[j] - z[l]) * (z[j] - z[l]));
        }
        s(j, j) = d;
        for (int i = j + 1; i < n; ++i) s(i, j) = s(j, i) = -weight / ((z[i] - z[j]) * (z[i] - z[j]));
    }
    return s;
}

} // namespace

HermiteLimit build_hermite_limit(int n) {
    HermiteLimit h{n, hermite_zeros(n), {}};
    h.matrix = interaction_matrix(h.zeros, 1.0, [](int) { return 1.0; });
    return h;
}

LaguerreLimit build_laguerre_limit(int n, double beta) {
    LaguerreLimit l{n, beta, laguerre_zeros(n, beta), {}};
    const auto& z = l.zeros;
    l.matrix = interaction_matrix(z, 2.0, [&](int j) { return (beta + 1.0) / (z[j] * z[j]); });
    return l;
}

std::vector<double> hermite_stationarity(const std::vector<double>& zeros) {
    const std::size_t n = zeros.size();
    std::vector<double> res(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
            if (l != j) s += 1.0 / (zeros[j] - zeros[l]);
        }
        res[j] = zeros[j] - s;
    }
    return res;
}

std::vector<double> laguerre_stationarity(const std::vector<double>& zeros, double beta) {
    const std::size_t n = zeros.size();
    std::vector<double> res(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
            if (l != j) s += 1.0 / (zeros[j] - zeros[l]);
        }
        res[j] = (beta + 1.0) / zeros[j] - 1.0 + 2.0 * s;
    }
    return res;
}

std::vector<LimitDistance> hermite_convergence(int n, const std::vector<double>& alphas) {
    const HermiteLimit limit = build_hermite_limit(n);
    const double ref_norm = limit.matrix.norm();
    std::vector<LimitDistance> out;
    out.reserve(alphas.size());
    for (const double alpha : alphas) {
        if (!(alpha > 0.0)) throw DomainError("hermite_convergence: alphas must be > 0");
        const FreezePoint freeze(EnsembleParams(n, 0.0, alpha + 1.0));
        const Eigen::MatrixXd scaled = build_algebraic(freeze).entries / alpha;
        double zero_gap = 0.0;
        for (int j = 0; j < n; ++j) {
            zero_gap = std::max(zero_gap, std::fabs(std::sqrt(alpha) * freeze.z()[j] - limit.zeros[j]));
        }
        out.push_back({alpha, (scaled - limit.matrix).norm() / ref_norm, zero_gap});
    }
    return out;
}

std::vector<LimitDistance> laguerre_convergence(int n, double beta, const std::vector<double>& alphas) {
    const LaguerreLimit limit = build_laguerre_limit(n, beta);
    const double ref_norm = limit.matrix.norm();
    std::vector<LimitDistance> out;
    out.reserve(alphas.size());
    for (const double alpha : alphas) {
        if (!(alpha >= beta)) throw DomainError("laguerre_convergence: alpha must be >= beta (a = alpha - beta >= 0)");
        const FreezePoint freeze(EnsembleParams(n, alpha - beta, beta + 1.0));
        const Eigen::MatrixXd scaled = build_algebraic(freeze).entries * (8.0 / (alpha * alpha));
        double zero_gap = 0.0;
        for (int j = 0; j < n; ++j) {
            zero_gap = std::max(zero_gap, std::fabs(0.5 * alpha * (1.0 + freeze.z()[j]) - limit.zeros[j]));
        }
        out.push_back({alpha, (scaled - limit.matrix).norm() / ref_norm, zero_gap});
    }
    return out;
}

} // namespace freezing
