#include "freezing/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "freezing/errors.hpp"

namespace freezing {

JacobiRecurrence jacobi_recurrence(int n, double alpha, double beta) {
    if (n < 1) throw DomainError("jacobi_recurrence: N must be >= 1");
    if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("jacobi_recurrence: alpha, beta must be > -1");

    JacobiRecurrence rec;
    rec.n = n;
    rec.alpha = alpha;
    rec.beta = beta;
    rec.diag.resize(n);
    rec.offdiag.resize(n - 1);

    const double ab = alpha + beta;
    rec.diag[0] = (beta - alpha) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double c = 2.0 * k + ab;
        rec.diag[k] = (beta * beta - alpha * alpha) / (c * (c + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        double sq;
        if (k == 1) {
            // the general formula is 0/0 when alpha + beta = -1
            sq = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        } else {
            const double c = 2.0 * k + ab;
            sq = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (c * c * (c + 1.0) * (c - 1.0));
        }
        rec.offdiag[k - 1] = std::sqrt(sq);
    }
    return rec;
}

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> offdiag) {
    const int n = static_cast<int>(d.size());
    if (n == 0) return d;
    if (static_cast<int>(offdiag.size()) != n - 1) {
        throw ShapeError("tridiagonal_eigenvalues: offdiag must have length n-1");
    }
    std::vector<double> e(offdiag);
    e.push_back(0.0);

    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m = l;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (++iter > 60) throw ConvergenceError("tridiagonal QL: no convergence for eigenvalue " + std::to_string(l));

            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool deflated = false;
            for (int i = m - 1; i >= l; --i) {
                const double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (deflated) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> polish_zeros(std::vector<double> zeros, const PolyEvaluator& poly, int max_steps) {
    std::sort(zeros.begin(), zeros.end());
    const std::size_t n = zeros.size();
    std::vector<double> spacing(n, 1.0);
    for (std::size_t j = 0; j < n; ++j) {
        double gap = std::numeric_limits<double>::infinity();
        if (j > 0) gap = std::min(gap, zeros[j] - zeros[j - 1]);
        if (j + 1 < n) gap = std::min(gap, zeros[j + 1] - zeros[j]);
        if (std::isfinite(gap)) spacing[j] = gap;
        if (!(spacing[j] > 0.0)) throw ConvergenceError("polish_zeros: coincident starting zeros");
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (std::size_t j = 0; j < n; ++j) {
        double x = zeros[j];
        bool converged = false;
        for (int step = 0; step < max_steps && !converged; ++step) {
            const PolyValue pv = poly(x);
            if (pv.value == 0.0) {
                converged = true;
                break;
            }
            if (pv.derivative == 0.0 || !std::isfinite(pv.derivative)) break;
            const double delta = pv.value / pv.derivative;
            const double tol = std::max(1e-13 * spacing[j], 8.0 * eps * std::fabs(x));
            x -= delta;
            converged = std::fabs(delta) <= tol;
        }
        if (!converged) {
            throw ConvergenceError("polish_zeros: Newton refinement did not settle for zero " + std::to_string(j) +
                                   " within " + std::to_string(max_steps) + " steps");
        }
        zeros[j] = x;
    }
    std::sort(zeros.begin(), zeros.end());
    for (std::size_t j = 1; j < n; ++j) {
        if (!(zeros[j] > zeros[j - 1])) throw ConvergenceError("polish_zeros: refined zeros are not strictly ordered");
    }
    return zeros;
}

std::vector<double> jacobi_zeros(int n, double alpha, double beta) {
    const JacobiRecurrence rec = jacobi_recurrence(n, alpha, beta);
    auto guess = tridiagonal_eigenvalues(rec.diag, rec.offdiag);
    return polish_zeros(std::move(guess),
                        [=](double x) { return jacobi_eval_with_derivative(n, alpha, beta, x); });
}

std::vector<double> hermite_zeros(int n) {
    if (n < 1) throw DomainError("hermite_zeros: N must be >= 1");
    std::vector<double> diag(n, 0.0);
    std::vector<double> off(n - 1);
    for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(0.5 * k);
    auto guess = tridiagonal_eigenvalues(std::move(diag), std::move(off));
    return polish_zeros(std::move(guess), [=](double x) { return hermite_eval_with_derivative(n, x); });
}

std::vector<double> laguerre_zeros(int n, double beta) {
    if (n < 1) throw DomainError("laguerre_zeros: N must be >= 1");
    if (!(beta > -1.0)) throw DomainError("laguerre_zeros: beta must be > -1");
    std::vector<double> diag(n);
    std::vector<double> off(n - 1);
    for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + beta + 1.0;
    for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(k * (k + beta));
    auto guess = tridiagonal_eigenvalues(std::move(diag), std::move(off));
    return polish_zeros(std::move(guess), [=](double x) { return laguerre_eval_with_derivative(n, beta, x); });
}

} // namespace freezing
