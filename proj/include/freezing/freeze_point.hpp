#pragma once

#include <span>
#include <utility>
#include <vector>

#include "freezing/params.hpp"

namespace freezing {

/// The freezing point of an ensemble: the ordered zeros z of P_N^(alpha,beta),
/// their trigonometric image t_j = arccos(z_j)/2 and the closed-form scalars
/// attached to them. Immutable after construction.
///
/// z is ascending (algebraic alcove A); t keeps the same index order and is
/// therefore descending (trigonometric alcove).
class FreezePoint {
public:
    /// Computes the zeros and every derived scalar for `params`.
    explicit FreezePoint(const EnsembleParams& params);

    const EnsembleParams& params() const noexcept { return params_; }
    int n() const noexcept { return params_.n(); }
    std::span<const double> z() const noexcept { return z_; }
    std::span<const double> t() const noexcept { return t_; }
    double log_phi() const noexcept { return log_phi_; }
    double log_prod_one_minus() const noexcept { return log_prod_one_minus_; }
    double log_prod_one_plus() const noexcept { return log_prod_one_plus_; }

private:
    EnsembleParams params_;
    std::vector<double> z_;
    std::vector<double> t_;
    double log_phi_;
    double log_prod_one_minus_;
    double log_prod_one_plus_;
};

/// Ascending zeros of P_N^(alpha,beta) for the ensemble's (alpha, beta).
std::vector<double> compute_zeros(const EnsembleParams& params);

/// Componentwise arccos(x_j)/2, index order preserved.
std::vector<double> to_trig_coordinates(std::span<const double> x);

/// j-th entry: sum_{i!=j} 1/(z_j - z_i) + (a+b)/2 / (z_j - 1) + b/2 / (z_j + 1).
/// Vanishes exactly at the freezing point.
std::vector<double> stationarity_residual(std::span<const double> z, const EnsembleParams& params);

/// log phi(z) from the discriminant closed form (no zeros needed).
double log_phi_closed_form(const EnsembleParams& params);

/// log phi(x) = sum_{i<j} log(x_j - x_i) + sum_j [(a+b)/2 log(1-x_j) + b/2 log(1+x_j)],
/// evaluated termwise. Requires x strictly ascending inside (-1, 1).
double log_phi_direct(std::span<const double> x, const EnsembleParams& params);

/// Closed forms (log prod(1 - z_j), log prod(1 + z_j)).
std::pair<double, double> log_products(const EnsembleParams& params);

} // namespace freezing
