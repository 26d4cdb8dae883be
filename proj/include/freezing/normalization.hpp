#pragma once

#include "freezing/freeze_point.hpp"

namespace freezing {

// Normalization constants of the ensemble density, all in log space: at
// N = 8, kappa = 100 the raw values are far outside double range.

struct NormalizationReport {
    double log_c_kappa;
    double log_C_kappa;
    double log_C_limit;
};

/// log c_kappa, where 1/c_kappa is the Selberg integral
///   2^{(kappa N/2)(N+alpha+beta+1)} / N!
///   * prod_j Gamma(1 + j kappa/2) / Gamma(1 + kappa/2)
///          * Gamma(kappa(beta+j)/2 + 1/2) Gamma(kappa(alpha+j)/2 + 1/2)
///          / Gamma(kappa(N+alpha+beta+j)/2 + 1).
double log_selberg_constant(const EnsembleParams& params);

/// log C_kappa = log c_kappa - (N/2) log kappa - (1/2) log prod(1 - z_j^2) + kappa log phi(z):
/// the x-independent factor of the density of sqrt(kappa)(X - z).
double log_C_kappa(const EnsembleParams& params, const FreezePoint& freeze);

/// Limit of C_kappa as kappa -> infinity:
///   sqrt(N!) / (2^{2N} pi^{N/2}) * ((N+alpha+beta+1)_N)^{3/2} / sqrt((alpha+1)_N (beta+1)_N).
double log_C_limit(const EnsembleParams& params);

NormalizationReport normalization_report(const EnsembleParams& params);

} // namespace freezing
