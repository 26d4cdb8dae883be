#include <cmath>
#include <random>

#include "doctest.h"

#include "../oracles/reference_values.hpp"
#include "freezing/freeze_point.hpp"
#include "freezing/recurrence.hpp"

using namespace freezing;

namespace {

template <std::size_t N>
void check_zeros(const std::array<double, N>& ref, double a, double b) {
    const FreezePoint fp(EnsembleParams(static_cast<int>(N), a, b));
    REQUIRE(fp.z().size() == N);
    for (std::size_t j = 0; j < N; ++j) CHECK(fp.z()[j] == doctest::Approx(ref[j]).epsilon(2e-15));
}

} // namespace

TEST_CASE("freezing point: quadratic and linear cases") {
    const FreezePoint two(EnsembleParams(2, 0.0, 1.0));
    CHECK(two.z()[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(two.z()[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));

    const FreezePoint one(EnsembleParams(1, 1.0, 1.0));
    CHECK(one.z()[0] == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK(one.t()[0] == doctest::Approx(0.5 * std::acos(-1.0 / 3.0)));
}

TEST_CASE("freezing point matches high-precision references") {
    check_zeros(reference::zeros_n5_a1p0_b1p0, 1.0, 1.0);
    check_zeros(reference::zeros_n8_a2p0_b0p5, 2.0, 0.5);
    check_zeros(reference::zeros_n3_a0p5_b3p0, 0.5, 3.0);
}

TEST_CASE("freezing point lies in the alcoves") {
    for (int n : {1, 4, 16, 64}) {
        const FreezePoint fp(EnsembleParams(n, 0.5, 3.0));
        for (std::size_t j = 0; j < fp.z().size(); ++j) {
            CHECK(std::fabs(fp.z()[j]) < 1.0);
            CHECK(fp.t()[j] > 0.0);
            CHECK(fp.t()[j] < M_PI / 2);
            if (j > 0) {
                CHECK(fp.z()[j] > fp.z()[j - 1]);
                CHECK(fp.t()[j] < fp.t()[j - 1]);
            }
        }
    }
}

TEST_CASE("stationarity residual vanishes at the freezing point and not elsewhere") {
    const EnsembleParams p(6, 2.0, 0.5);
    const FreezePoint fp(p);
    for (double r : stationarity_residual(fp.z(), p)) CHECK(std::fabs(r) < 1e-11);
    std::vector<double> shifted(fp.z().begin(), fp.z().end());
    shifted[2] += 1e-3;
    double worst = 0.0;
    for (double r : stationarity_residual(shifted, p)) worst = std::max(worst, std::fabs(r));
    CHECK(worst > 1e-3);
}

TEST_CASE("centro-symmetry for a = 0 and exponent-swap reflection") {
    // a = 0 gives alpha = beta.
    const FreezePoint sym(EnsembleParams(7, 0.0, 1.7));
    for (std::size_t j = 0; j < 7; ++j) CHECK(sym.z()[j] == doctest::Approx(-sym.z()[6 - j]).epsilon(1e-14));
    // Zeros of P^(beta,alpha) are minus the zeros of P^(alpha,beta), reversed.
    const std::vector<double> z1 = jacobi_zeros(6, 1.5, 0.5);
    const std::vector<double> z2 = jacobi_zeros(6, 0.5, 1.5);
    for (std::size_t j = 0; j < 6; ++j) CHECK(z1[j] == doctest::Approx(-z2[5 - j]).epsilon(1e-14));
}

TEST_CASE("discriminant closed form and products") {
    for (int n : {1, 2, 5, 17}) {
        for (auto [a, b] : {std::pair{0.0, 1.0}, {2.0, 0.5}, {0.5, 3.0}}) {
            const EnsembleParams p(n, a, b);
            const FreezePoint fp(p);
            CHECK(log_phi_direct(fp.z(), p) == doctest::Approx(log_phi_closed_form(p)).epsilon(1e-12));
            double minus = 0.0;
            double plus = 0.0;
            for (double z : fp.z()) {
                minus += std::log1p(-z);
                plus += std::log1p(z);
            }
            const auto [cm, cp] = log_products(p);
            CHECK(std::fabs(minus - cm) < 1e-12);
            CHECK(std::fabs(plus - cp) < 1e-12);
            CHECK(fp.log_prod_one_minus() == cm);
        }
    }
    // N = 1, a = b = 1: z = -1/3, prod(1 - z) = 4/3, prod(1 + z) = 2/3
    const auto [m, pl] = log_products(EnsembleParams(1, 1.0, 1.0));
    CHECK(std::exp(m) == doctest::Approx(4.0 / 3.0));
    CHECK(std::exp(pl) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("freezing point maximizes log phi over the alcove") {
    const EnsembleParams p(5, 1.0, 2.0);
    const FreezePoint fp(p);
    const double best = log_phi_direct(fp.z(), p);
    std::mt19937_64 rng(11);
    std::normal_distribution<double> noise(0.0, 1e-3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> x(fp.z().begin(), fp.z().end());
        for (double& v : x) v += noise(rng);
        CHECK(log_phi_direct(x, p) < best);
    }
}

TEST_CASE("trigonometric coordinates invert cos(2t)") {
    const std::vector<double> x = {-0.99, -0.3, 0.0, 0.5, 0.999};
    const std::vector<double> t = to_trig_coordinates(x);
    for (std::size_t j = 0; j < x.size(); ++j) CHECK(std::cos(2.0 * t[j]) == doctest::Approx(x[j]).epsilon(1e-14));
}
