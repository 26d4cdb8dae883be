#include "freezing/normalization.hpp"

#include <cmath>
#include <numbers>

#include "freezing/errors.hpp"
#include "freezing/special.hpp"

namespace freezing {

double log_selberg_constant(const EnsembleParams& params) {
    const int n = params.n();
    const double kappa = params.kappa();
    const double alpha = params.alpha();
    const double beta = params.beta();
    const double half = 0.5 * kappa;

    double log_inverse = half * n * (n + alpha + beta + 1.0) * std::numbers::ln2 - log_factorial(n);
    const double lg_one_plus_half = log_gamma(1.0 + half);
    for (int j = 1; j <= n; ++j) {
        log_inverse += log_gamma(1.0 + j * half) - lg_one_plus_half;
        log_inverse += log_gamma(half * (beta + j) + 0.5) + log_gamma(half * (alpha + j) + 0.5);
        log_inverse -= log_gamma(half * (n + alpha + beta + j) + 1.0);
    }
    return -log_inverse;
}

double log_C_kappa(const EnsembleParams& params, const FreezePoint& freeze) {
    if (freeze.params().n() != params.n() || freeze.params().a() != params.a() || freeze.params().b() != params.b()) {
        throw ShapeError("log_C_kappa: freeze point belongs to different (N, a, b)");
    }
    const double kappa = params.kappa();
    return log_selberg_constant(params) - 0.5 * params.n() * std::log(kappa) -
           0.5 * (freeze.log_prod_one_minus() + freeze.log_prod_one_plus()) + kappa * freeze.log_phi();
}

double log_C_limit(const EnsembleParams& params) {
    const int n = params.n();
    const double alpha = params.alpha();
    const double beta = params.beta();
    return 0.5 * log_factorial(n) - 2.0 * n * std::numbers::ln2 - 0.5 * n * std::log(std::numbers::pi) +
           1.5 * log_pochhammer(n + alpha + beta + 1.0, n) -
           0.5 * (log_pochhammer(alpha + 1.0, n) + log_pochhammer(beta + 1.0, n));
}

NormalizationReport normalization_report(const EnsembleParams& params) {
    const FreezePoint freeze(params);
    return {log_selberg_constant(params), log_C_kappa(params, freeze), log_C_limit(params)};
}

} // namespace freezing
