#pragma once

#include <string>

namespace freezing {

/// One beta-Jacobi ensemble: dimension N, shape parameters (a, b) and the
/// freezing parameter kappa, with multiplicities k = kappa * (a, b, 1).
///
/// The Jacobi exponents alpha = a + b - 1 and beta = b - 1 are always
/// derived; there is no way to set them independently.
class EnsembleParams {
public:
    /// Validates N >= 1, a >= 0, b > 0, kappa > 0; throws DomainError naming
    /// the violated constraint otherwise.
    EnsembleParams(int n, double a, double b, double kappa = 1.0);

    int n() const noexcept { return n_; }
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double kappa() const noexcept { return kappa_; }

    double alpha() const noexcept { return a_ + b_ - 1.0; }
    double beta() const noexcept { return b_ - 1.0; }

    // Multiplicities (k1, k2, k3) = kappa * (a, b, 1).
    double k1() const noexcept { return kappa_ * a_; }
    double k2() const noexcept { return kappa_ * b_; }
    double k3() const noexcept { return kappa_; }

    /// Same (N, a, b) with a different freezing parameter.
    EnsembleParams with_kappa(double kappa) const { return {n_, a_, b_, kappa}; }

    std::string describe() const;

    friend bool operator==(const EnsembleParams&, const EnsembleParams&) = default;

private:
    int n_;
    double a_;
    double b_;
    double kappa_;
};

} // namespace freezing
