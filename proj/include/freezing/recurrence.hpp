#pragma once

#include <functional>
#include <vector>

#include "freezing/special.hpp"

namespace freezing {

/// Symmetrized monic three-term recurrence of P_N^(alpha,beta): the N x N
/// symmetric tridiagonal (Jacobi) matrix whose eigenvalues are the zeros.
struct JacobiRecurrence {
    int n = 0;
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<double> diag;    // length n
    std::vector<double> offdiag; // length n-1, strictly positive
};

JacobiRecurrence jacobi_recurrence(int n, double alpha, double beta);

/// Eigenvalues of the symmetric tridiagonal matrix (diag, offdiag), ascending.
/// Implicit QL with Wilkinson shifts; throws ConvergenceError after 60
/// iterations on a single eigenvalue.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> offdiag);

using PolyEvaluator = std::function<PolyValue(double)>;

/// Newton refinement of approximate simple zeros, at most `max_steps` steps
/// per zero. A zero is accepted once the Newton correction is below
/// 1e-13 times the local zero spacing, or below the rounding floor of
/// 8 ulp(z) when that is larger. Returns the refined zeros sorted ascending;
/// throws ConvergenceError if any zero fails to settle.
std::vector<double> polish_zeros(std::vector<double> zeros, const PolyEvaluator& poly, int max_steps = 5);

/// Ascending zeros of P_N^(alpha,beta) (Golub-Welsch eigenvalues + Newton polish).
std::vector<double> jacobi_zeros(int n, double alpha, double beta);

/// Ascending zeros of the physicists' Hermite polynomial H_N.
std::vector<double> hermite_zeros(int n);

/// Ascending zeros of the Laguerre polynomial L_N^(beta).
std::vector<double> laguerre_zeros(int n, double beta);

} // namespace freezing
