#pragma once

// Scalar special-function kernels shared by every other module. All of them
// are pure functions and may be called concurrently.

namespace freezing {

/// P_n^(alpha,beta)(x) in the classical normalization P_n(1) = binom(n+alpha, n),
/// evaluated by the forward three-term recurrence.
/// Throws DomainError if alpha <= -1, beta <= -1 or n < 0.
double jacobi_eval(int n, double alpha, double beta, double x);

struct PolyValue {
    double value;
    double derivative;
};

/// P_n^(alpha,beta)(x) together with its derivative,
/// using d/dx P_n^(a,b) = (n+a+b+1)/2 * P_{n-1}^(a+1,b+1).
PolyValue jacobi_eval_with_derivative(int n, double alpha, double beta, double x);

/// Physicists' Hermite polynomial H_n(x) and its derivative 2n H_{n-1}(x).
PolyValue hermite_eval_with_derivative(int n, double x);

/// Generalized Laguerre polynomial L_n^(beta)(x) and its derivative.
PolyValue laguerre_eval_with_derivative(int n, double beta, double x);

/// log Gamma(x) for x > 0: upward shift to x >= 10, then the Stirling series.
/// Thread-safe (no signgam side channel). Throws DomainError for x <= 0.
double log_gamma(double x);

/// log((x)_n) = sum_{j<n} log(x + j), with (x)_n the rising factorial.
/// Throws DomainError for x <= 0 or n < 0.
double log_pochhammer(double x, int n);

/// log(n!).
double log_factorial(int n);

} // namespace freezing
