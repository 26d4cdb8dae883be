#pragma once

#include "freezing/params.hpp"

// Independent reference computations used by the verification commands and
// the test suites. None of them goes through the Selberg product or the
// project's own log_gamma.

namespace freezing::oracle {

/// log(1/c_kappa) for N = 1 through the Beta function, evaluated with lgammal:
///   (kappa(a+2b)/2) log 2 + log B(kappa(a+b)/2 + 1/2, kappa b/2 + 1/2).
double log_inverse_normalizer_beta(const EnsembleParams& params);

/// log(1/c_kappa) by direct tanh-sinh quadrature of the unnormalized density
/// over the alcove. Only N = 1 and N = 2 are supported (throws DomainError otherwise).
double log_inverse_normalizer_quadrature(const EnsembleParams& params);

/// Mean of (1 - X)/2 for N = 1: p/(p+q), p = kappa(a+b)/2 + 1/2, q = kappa b/2 + 1/2.
double beta_mean_one_minus(const EnsembleParams& params);

} // namespace freezing::oracle
