#include "freezing/freeze_point.hpp"

#include <cmath>
#include <numbers>

#include "freezing/errors.hpp"
#include "freezing/recurrence.hpp"

namespace freezing {

std::vector<double> compute_zeros(const EnsembleParams& params) {
    return jacobi_zeros(params.n(), params.alpha(), params.beta());
}

std::vector<double> to_trig_coordinates(std::span<const double> x) {
    std::vector<double> t(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) t[j] = 0.5 * std::acos(x[j]);
    return t;
}

std::vector<double> stationarity_residual(std::span<const double> z, const EnsembleParams& params) {
    const std::size_t n = z.size();
    const double upper = 0.5 * (params.a() + params.b());
    const double lower = 0.5 * params.b();
    std::vector<double> res(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i != j) s += 1.0 / (z[j] - z[i]);
        }
        res[j] = s + upper / (z[j] - 1.0) + lower / (z[j] + 1.0);
    }
    return res;
}

double log_phi_closed_form(const EnsembleParams& params) {
    const int n = params.n();
    const double alpha = params.alpha();
    const double beta = params.beta();
    const double top = n + alpha + beta;
    const auto xlogx_half = [](double v) { return 0.5 * v * std::log(v); };

    double acc = 0.5 * n * (top + 1.0) * std::numbers::ln2;
    for (int j = 1; j <= n; ++j) {
        acc += xlogx_half(j) + xlogx_half(alpha + j) + xlogx_half(beta + j) - xlogx_half(top + j);
    }
    return acc;
}

double log_phi_direct(std::span<const double> x, const EnsembleParams& params) {
    const std::size_t n = x.size();
    const double upper = 0.5 * (params.a() + params.b());
    const double lower = 0.5 * params.b();
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) acc += std::log(x[j] - x[i]);
        acc += upper * std::log1p(-x[j]) + lower * std::log1p(x[j]);
    }
    return acc;
}

std::pair<double, double> log_products(const EnsembleParams& params) {
    const int n = params.n();
    const double alpha = params.alpha();
    const double beta = params.beta();
    const double top = n + alpha + beta;
    double minus = n * std::numbers::ln2;
    double plus = minus;
    for (int j = 1; j <= n; ++j) {
        minus += std::log(alpha + j) - std::log(top + j);
        plus += std::log(beta + j) - std::log(top + j);
    }
    return {minus, plus};
}

FreezePoint::FreezePoint(const EnsembleParams& params)
    : params_(params),
      z_(compute_zeros(params)),
      t_(to_trig_coordinates(z_)),
      log_phi_(log_phi_closed_form(params)) {
    const auto [minus, plus] = log_products(params);
    log_prod_one_minus_ = minus;
    log_prod_one_plus_ = plus;
    if (z_.front() <= -1.0 || z_.back() >= 1.0) {
        throw ConvergenceError("freeze point: zeros left the open interval (-1, 1)");
    }
}

} // namespace freezing
