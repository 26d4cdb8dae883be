#include "freezing/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "freezing/errors.hpp"

namespace freezing {
namespace {

void check_jacobi_exponents(int n, double alpha, double beta) {
    if (n < 0) throw DomainError("jacobi: degree must be >= 0");
    if (!(alpha > -1.0)) throw DomainError("jacobi: alpha must be > -1, got " + std::to_string(alpha));
    if (!(beta > -1.0)) throw DomainError("jacobi: beta must be > -1, got " + std::to_string(beta));
}

} // namespace

double jacobi_eval(int n, double alpha, double beta, double x) {
    check_jacobi_exponents(n, alpha, beta);
    if (n == 0) return 1.0;

    const double ab = alpha + beta;
    double p_prev = 1.0;
    double p = 0.5 * ((ab + 2.0) * x + (alpha - beta));
    // 2m(m+ab)(2m+ab-2) P_m = (2m+ab-1)[(2m+ab)(2m+ab-2)x + alpha^2-beta^2] P_{m-1}
    //                         - 2(m+alpha-1)(m+beta-1)(2m+ab) P_{m-2}
    for (int m = 2; m <= n; ++m) {
        const double c = 2.0 * m + ab;
        const double denom = 2.0 * m * (m + ab) * (c - 2.0);
        const double lin = (c - 1.0) * (c * (c - 2.0) * x + (alpha * alpha - beta * beta));
        const double back = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * c;
        const double next = (lin * p - back * p_prev) / denom;
        p_prev = p;
        p = next;
    }
    return p;
}

PolyValue jacobi_eval_with_derivative(int n, double alpha, double beta, double x) {
    check_jacobi_exponents(n, alpha, beta);
    const double value = jacobi_eval(n, alpha, beta, x);
    if (n == 0) return {value, 0.0};
    const double slope = 0.5 * (n + alpha + beta + 1.0) * jacobi_eval(n - 1, alpha + 1.0, beta + 1.0, x);
    return {value, slope};
}

PolyValue hermite_eval_with_derivative(int n, double x) {
    if (n < 0) throw DomainError("hermite: degree must be >= 0");
    if (n == 0) return {1.0, 0.0};
    double h_prev = 1.0;
    double h = 2.0 * x;
    for (int m = 1; m < n; ++m) {
        const double next = 2.0 * x * h - 2.0 * m * h_prev;
        h_prev = h;
        h = next;
    }
    return {h, 2.0 * n * h_prev};
}

PolyValue laguerre_eval_with_derivative(int n, double beta, double x) {
    if (n < 0) throw DomainError("laguerre: degree must be >= 0");
    if (!(beta > -1.0)) throw DomainError("laguerre: beta must be > -1");

    const auto eval = [x](int deg, double par) {
        if (deg == 0) return 1.0;
        double l_prev = 1.0;
        double l = 1.0 + par - x;
        for (int m = 1; m < deg; ++m) {
            const double next = ((2.0 * m + 1.0 + par - x) * l - (m + par) * l_prev) / (m + 1.0);
            l_prev = l;
            l = next;
        }
        return l;
    };
    if (n == 0) return {1.0, 0.0};
    return {eval(n, beta), -eval(n - 1, beta + 1.0)};
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma: argument must be > 0");
    if (std::isinf(x)) return x;

    // log Gamma(x) = log Gamma(x + k) - log(x (x+1) ... (x+k-1))
    double shift_product = 1.0;
    double y = x;
    while (y < 10.0) {
        shift_product *= y;
        y += 1.0;
    }

    // Stirling series with B_{2k} / (2k (2k-1)) coefficients, k = 1..8.
    static constexpr std::array<double, 8> kCoeff = {
        1.0 / 12.0,           -1.0 / 360.0,          1.0 / 1260.0,       -1.0 / 1680.0,
        1.0 / 1188.0,         -691.0 / 360360.0,     1.0 / 156.0,        -3617.0 / 122400.0,
    };
    const double inv = 1.0 / y;
    const double inv2 = inv * inv;
    double series = 0.0;
    for (auto it = kCoeff.rbegin(); it != kCoeff.rend(); ++it) series = series * inv2 + *it;
    series *= inv;

    const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
    return (y - 0.5) * std::log(y) - y + half_log_two_pi + series - std::log(shift_product);
}

double log_pochhammer(double x, int n) {
    if (!(x > 0.0)) throw DomainError("log_pochhammer: base must be > 0");
    if (n < 0) throw DomainError("log_pochhammer: count must be >= 0");
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += std::log(x + j);
    return sum;
}

double log_factorial(int n) {
    if (n < 0) throw DomainError("log_factorial: argument must be >= 0");
    return log_pochhammer(1.0, n);
}

} // namespace freezing
