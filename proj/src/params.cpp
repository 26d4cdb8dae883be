#include "freezing/params.hpp"

#include <cmath>
#include <sstream>

#include "freezing/errors.hpp"

namespace freezing {

EnsembleParams::EnsembleParams(int n, double a, double b, double kappa)
    : n_(n), a_(a), b_(b), kappa_(kappa) {
    if (n < 1) throw DomainError("invalid parameter: N must satisfy N >= 1");
    if (!std::isfinite(a) || a < 0.0) throw DomainError("invalid parameter: a must satisfy a >= 0");
    if (!std::isfinite(b) || b <= 0.0) throw DomainError("invalid parameter: b must satisfy b > 0");
    if (!std::isfinite(kappa) || kappa <= 0.0) {
        throw DomainError("invalid parameter: kappa must satisfy kappa > 0");
    }
}

std::string EnsembleParams::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << "N=" << n_ << " a=" << a_ << " b=" << b_ << " kappa=" << kappa_ << " (alpha=" << alpha()
       << " beta=" << beta() << ")";
    return os.str();
}

} // namespace freezing
