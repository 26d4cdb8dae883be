#include "freezing/oracles.hpp"

#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "freezing/errors.hpp"

namespace freezing::oracle {
namespace {

struct Exponents {
    double upper;  // exponent of (1 - x)
    double lower;  // exponent of (1 + x)
};

Exponents exponents(const EnsembleParams& p) {
    return {0.5 * p.kappa() * (p.a() + p.b()) - 0.5, 0.5 * p.kappa() * p.b() - 0.5};
}

} // namespace

double log_inverse_normalizer_beta(const EnsembleParams& params) {
    if (params.n() != 1) throw DomainError("Beta oracle is only valid for N = 1");
    // Extended precision: at kappa = 1e4 the three log-gamma terms are ~1e5 while
    // their combination is O(100), so a double reference carries its own ~1e-11 error.
    const long double kappa = params.kappa();
    const long double p = 0.5L * kappa * (params.a() + params.b()) + 0.5L;
    const long double q = 0.5L * kappa * params.b() + 0.5L;
    const long double ln2 = std::log(2.0L);
    return static_cast<double>(0.5L * kappa * (params.a() + 2.0L * params.b()) * ln2 + std::lgammal(p) +
                               std::lgammal(q) - std::lgammal(p + q));
}

double log_inverse_normalizer_quadrature(const EnsembleParams& params) {
    const Exponents e = exponents(params);
    const double kappa = params.kappa();
    constexpr double kTol = 1e-13;

    // xc is the signed distance to the nearest endpoint: left end -> (left - x) < 0,
    // right end -> (right - x) > 0.
    const auto weight_from = [&](double one_minus, double one_plus) {
        return std::pow(one_minus, e.upper) * std::pow(one_plus, e.lower);
    };

    if (params.n() == 1) {
        boost::math::quadrature::tanh_sinh<double> integrator;
        const auto f = [&](double x, double xc) {
            const double one_plus = xc < 0 ? -xc : 1.0 + x;
            const double one_minus = xc > 0 ? xc : 1.0 - x;
            return weight_from(one_minus, one_plus);
        };
        return std::log(integrator.integrate(f, -1.0, 1.0, kTol));
    }
    if (params.n() == 2) {
        boost::math::quadrature::tanh_sinh<double> outer;
        boost::math::quadrature::tanh_sinh<double> inner;
        const auto g = [&](double x2, double xc2) {
            const double one_plus2 = xc2 < 0 ? -xc2 : 1.0 + x2;
            const double one_minus2 = xc2 > 0 ? xc2 : 1.0 - x2;
            if (!(x2 > -1.0) || one_plus2 <= 0.0) return 0.0;
            const auto h = [&](double x1, double xc1) {
                const double one_plus1 = xc1 < 0 ? -xc1 : 1.0 + x1;
                const double gap = xc1 > 0 ? xc1 : x2 - x1;
                // Abscissae of a very short inner interval can round onto the endpoint.
                if (one_plus1 <= 0.0 || gap <= 0.0) return 0.0;
                return std::pow(gap, kappa) * weight_from(2.0 - one_plus1, one_plus1);
            };
            return weight_from(one_minus2, one_plus2) * inner.integrate(h, -1.0, x2, kTol);
        };
        return std::log(outer.integrate(g, -1.0, 1.0, kTol));
    }
    throw DomainError("quadrature oracle supports N <= 2 only");
}

double beta_mean_one_minus(const EnsembleParams& params) {
    const double p = 0.5 * params.kappa() * (params.a() + params.b()) + 0.5;
    const double q = 0.5 * params.kappa() * params.b() + 0.5;
    return p / (p + q);
}

} // namespace freezing::oracle
