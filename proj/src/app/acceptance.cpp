#include "freezing/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "freezing/commands.hpp"
#include "freezing/freeze_point.hpp"
#include "freezing/limits.hpp"
#include "freezing/normalization.hpp"
#include "freezing/oracles.hpp"
#include "freezing/precision.hpp"
#include "freezing/sampler.hpp"
#include "freezing/spectral.hpp"

namespace freezing::acceptance {
namespace {

std::string fmt(const char* format, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

template <typename F>
void for_grid(F&& f) {
    for (int n : kGridN) {
        for (const auto& [a, b] : kGridAB) f(EnsembleParams(n, a, b));
    }
}

bool strictly_decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] < v[i - 1])) return false;
    }
    return true;
}

std::string join(const std::vector<double>& v) {
    std::string s;
    for (double x : v) s += (s.empty() ? "" : ", ") + fmt("%.3g", x);
    return "[" + s + "]";
}

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome stationarity() {
    double worst = 0.0;
    for_grid([&](const EnsembleParams& p) {
        const FreezePoint fp(p);
        for (double r : stationarity_residual(fp.z(), p)) worst = std::max(worst, std::fabs(r));
    });
    return {worst <= kStationarityTol, fmt("max residual %.3g (tol %.0e)", worst, kStationarityTol)};
}

Outcome discriminant() {
    double worst = 0.0;
    for_grid([&](const EnsembleParams& p) {
        const FreezePoint fp(p);
        worst = std::max(worst, std::fabs(log_phi_direct(fp.z(), p) - fp.log_phi()));
    });
    return {worst <= kLogPhiTol, fmt("max |log phi difference| %.3g (tol %.0e)", worst, kLogPhiTol)};
}

Outcome products() {
    double worst = 0.0;
    for_grid([&](const EnsembleParams& p) {
        const FreezePoint fp(p);
        double minus = 1.0;
        double plus = 1.0;
        for (double z : fp.z()) {
            minus *= 1.0 - z;
            plus *= 1.0 + z;
        }
        worst = std::max(worst, std::fabs(minus / std::exp(fp.log_prod_one_minus()) - 1.0));
        worst = std::max(worst, std::fabs(plus / std::exp(fp.log_prod_one_plus()) - 1.0));
    });
    return {worst <= kProductRelTol, fmt("max relative error %.3g (tol %.0e)", worst, kProductRelTol)};
}

Outcome determinant_s() {
    double worst = 0.0;
    for_grid([&](const EnsembleParams& p) {
        const LogDeterminant d = determinant_algebraic(p);
        worst = std::max(worst, std::fabs(d.numerical - d.closed_form) / p.n());
    });
    const double spot = std::exp(cholesky_log_det(build_algebraic(FreezePoint(EnsembleParams(2, 0.0, 1.0))).entries));
    const bool spot_ok = std::fabs(spot - 13.5) <= 1e-12 * 13.5;
    return {worst <= kLogDetPerDimTol && spot_ok,
            fmt("max |dlog det|/N %.3g (tol %.0e); N=2 alpha=beta=0 det %.15g (expected 13.5)", worst,
                kLogDetPerDimTol, spot)};
}

Outcome spectrum() {
    double worst = 0.0;
    for_grid([&](const EnsembleParams& p) {
        const SpectralDecomposition dec = symmetric_eigendecompose(build_trigonometric(FreezePoint(p)).entries);
        const std::vector<double> closed = closed_form_spectrum(p);
        for (int k = 0; k < p.n(); ++k) {
            const double lam = closed[static_cast<std::size_t>(k)];
            worst = std::max(worst, std::fabs(dec.eigenvalues(k) - lam) / lam);
        }
    });
    const auto eig = [](int n, double a, double b) {
        return symmetric_eigendecompose(build_trigonometric(FreezePoint(EnsembleParams(n, a, b))).entries).eigenvalues;
    };
    const Eigen::VectorXd one = eig(1, 1.0, 1.0);
    const Eigen::VectorXd two = eig(2, 0.0, 1.0);
    const bool spots = std::fabs(one(0) - 6.0) <= 1e-12 && std::fabs(two(0) - 8.0) <= 1e-12 &&
                       std::fabs(two(1) - 12.0) <= 1e-12;
    return {worst <= kSpectrumRelTol && spots,
            fmt("max relative eigenvalue error %.3g (tol %.0e); spots {%.15g} {%.15g, %.15g}", worst, kSpectrumRelTol,
                one(0), two(0), two(1))};
}

Outcome eigenvectors() {
    double worst_cos = 0.0;
    double worst_res = 0.0;
    for_grid([&](const EnsembleParams& p) {
        const FreezePoint fp(p);
        const PrecisionMatrix st = build_trigonometric(fp);
        const double norm = st.entries.norm();
        for (const EigenvectorCheck& c : verify_eigenvectors(st, DiscreteOPBasis(fp))) {
            worst_cos = std::max(worst_cos, 1.0 - c.cosine);
            worst_res = std::max(worst_res, c.residual / norm);
        }
    });
    return {worst_cos <= kEigenvectorTol && worst_res <= kEigenvectorTol,
            fmt("max 1-|cos| %.3g, max residual/||S~|| %.3g (tol %.0e)", worst_cos, worst_res, kEigenvectorTol)};
}

Outcome cross_relation() {
    double worst_cross = 0.0;
    double worst_det = 0.0;
    for_grid([&](const EnsembleParams& p) {
        const FreezePoint fp(p);
        const PrecisionMatrix s = build_algebraic(fp);
        const PrecisionMatrix st = build_trigonometric(fp);
        worst_cross = std::max(worst_cross, cross_relation_residual(s, st) / st.entries.cwiseAbs().maxCoeff());
        const LogDeterminant d = determinant_trigonometric(p);
        worst_det = std::max(worst_det, std::fabs(d.numerical - d.closed_form) / p.n());
    });
    return {worst_cross <= kCrossRelationTol && worst_det <= kLogDetPerDimTol,
            fmt("max scaled entry residual %.3g (tol %.0e); max |dlog det S~|/N %.3g (tol %.0e)", worst_cross,
                kCrossRelationTol, worst_det, kLogDetPerDimTol)};
}

Outcome normalization() {
    const std::vector<double> beta_kappas = {0.5, 1.0, 2.0, 10.0, 100.0, 1000.0, 10000.0};
    double beta_err = 0.0;
    for (const auto& [a, b] : kGridAB) {
        for (double k : beta_kappas) {
            const EnsembleParams p(1, a, b, k);
            beta_err = std::max(beta_err, std::fabs(log_selberg_constant(p) + oracle::log_inverse_normalizer_beta(p)));
        }
    }
    double quad_err = 0.0;
    const std::vector<EnsembleParams> quad_cases = {EnsembleParams(2, 0.0, 1.0, 2.0), EnsembleParams(2, 1.0, 1.0, 1.0),
                                                    EnsembleParams(2, 2.0, 0.5, 1.0), EnsembleParams(2, 0.5, 3.0, 2.0),
                                                    EnsembleParams(1, 1.0, 1.0, 3.0)};
    for (const EnsembleParams& p : quad_cases) {
        quad_err =
            std::max(quad_err, std::fabs(log_selberg_constant(p) + oracle::log_inverse_normalizer_quadrature(p)));
    }
    bool monotone = true;
    double worst_gauss = 0.0;
    double last_gap = 0.0;
    for_grid([&](const EnsembleParams& p) {
        const FreezePoint fp(p);
        const double limit = log_C_limit(p);
        std::vector<double> gaps;
        for (double k : {1e2, 1e3, 1e4}) gaps.push_back(std::fabs(log_C_kappa(p.with_kappa(k), fp) - limit));
        monotone = monotone && strictly_decreasing(gaps);
        last_gap = std::max(last_gap, gaps.back());
        const double gauss = 0.5 * cholesky_log_det(build_algebraic(fp).entries) -
                             0.5 * p.n() * std::log(2.0 * std::numbers::pi);
        worst_gauss = std::max(worst_gauss, std::fabs(gauss - limit));
    });
    const bool pass = beta_err <= kBetaOracleTol && quad_err <= kQuadratureOracleTol && monotone &&
                      worst_gauss <= kGaussianIdentityTol;
    return {pass, fmt("beta oracle %.3g (tol %.0e); quadrature %.3g (tol %.0e); monotone %s (max gap at 1e4: %.3g); "
                      "gaussian identity %.3g (tol %.0e)",
                      beta_err, kBetaOracleTol, quad_err, kQuadratureOracleTol, monotone ? "yes" : "no", last_gap,
                      worst_gauss, kGaussianIdentityTol)};
}

Outcome law_of_large_numbers() {
    std::vector<double> dist;
    for (double k : {10.0, 100.0, 1000.0}) {
        const EnsembleParams p(3, 1.0, 1.0, k);
        SamplerConfig c{p};
        c.n_samples = 50000;
        c.burn_in = kCltBurnIn;
        c.thinning = kCltThinning;
        c.n_chains = kCltChains;
        c.seed = kAcceptanceSeed;
        const SampleBatch batch = sample_mcmc(c);
        const FreezePoint fp(p);
        dist.push_back(batch_statistics(batch, fp.z(), 1.0).mean.norm());
    }
    return {strictly_decreasing(dist), "||mean - z|| over kappa {10, 100, 1000}: " + join(dist)};
}

cli::SampleOptions clt_options(int n_samples, std::uint64_t seed) {
    cli::SampleOptions o;
    o.n_samples = n_samples;
    o.seed = seed;
    o.burn_in = kCltBurnIn;
    o.thinning = kCltThinning;
    o.n_chains = kCltChains;
    return o;
}

Outcome central_limit() {
    const RunReport r = cli::cmd_clt(EnsembleParams(3, 1.0, 1.0, 500.0), clt_options(kCltSamples, kAcceptanceSeed));
    const auto& res = r.results;
    std::string failed;
    for (const Check& c : r.checks) {
        if (!c.pass) failed += " " + c.name;
    }
    return {r.all_pass(),
            fmt("frobenius algebraic %.4g, trigonometric %.4g (threshold %.2g); acceptance %.3f",
                res["algebraic"]["relative_frobenius_error"].get<double>(),
                res["trigonometric"]["relative_frobenius_error"].get<double>(), kCltFrobeniusThreshold,
                res["acceptance_rate"].get<double>()) +
                (failed.empty() ? "" : "; failed:" + failed)};
}

Outcome hermite_limit() {
    double det_err = 0.0;
    for (int n = 1; n <= 20; ++n) {
        det_err = std::max(det_err, std::fabs(cholesky_log_det(build_hermite_limit(n).matrix) - std::lgamma(n + 1.0)));
    }
    bool decreasing = true;
    double terminal_m = 0.0;
    double terminal_z = 0.0;
    for (int n : {2, 3, 5}) {
        std::vector<double> m;
        std::vector<double> z;
        for (const LimitDistance& d : hermite_convergence(n, {1e2, 1e3, 1e4})) {
            m.push_back(d.matrix_distance);
            z.push_back(d.zero_distance);
        }
        decreasing = decreasing && strictly_decreasing(m) && strictly_decreasing(z);
        terminal_m = std::max(terminal_m, m.back());
        terminal_z = std::max(terminal_z, z.back());
    }
    const bool pass = det_err <= kLimitDetTol && decreasing && terminal_m <= kHermiteTerminalBound &&
                      terminal_z <= kHermiteTerminalBound;
    return {pass, fmt("max |dlog det| %.3g (tol %.0e); decreasing %s; at alpha=1e4 matrix %.3g, zeros %.3g (bound %.0e)",
                      det_err, kLimitDetTol, decreasing ? "yes" : "no", terminal_m, terminal_z,
                      kHermiteTerminalBound)};
}

Outcome laguerre_limit() {
    double det_err = 0.0;
    double prod_err = 0.0;
    bool decreasing = true;
    double terminal_m = 0.0;
    double terminal_z = 0.0;
    for (double beta : {0.0, 0.5, 2.0}) {
        for (int n = 1; n <= 20; ++n) {
            const LaguerreLimit lim = build_laguerre_limit(n, beta);
            const double pochhammer = std::lgamma(beta + 1.0 + n) - std::lgamma(beta + 1.0);
            det_err = std::max(det_err, std::fabs(cholesky_log_det(lim.matrix) - (std::lgamma(n + 1.0) - pochhammer)));
            double log_prod = 0.0;
            for (double z : lim.zeros) log_prod += std::log(z);
            prod_err = std::max(prod_err, std::fabs(log_prod - pochhammer));
        }
        for (int n : {2, 3, 5}) {
            std::vector<double> m;
            std::vector<double> z;
            for (const LimitDistance& d : laguerre_convergence(n, beta, {1e2, 1e3, 1e4})) {
                m.push_back(d.matrix_distance);
                z.push_back(d.zero_distance);
            }
            decreasing = decreasing && strictly_decreasing(m) && strictly_decreasing(z);
            terminal_m = std::max(terminal_m, m.back());
            terminal_z = std::max(terminal_z, z.back());
        }
    }
    const bool pass = det_err <= kLimitDetTol && prod_err <= kLaguerreProductTol && decreasing &&
                      terminal_m <= kLaguerreMatrixTerminalBound && terminal_z <= kLaguerreZeroTerminalBound;
    return {pass, fmt("max |dlog det| %.3g (tol %.0e); product %.3g (tol %.0e); decreasing %s; at alpha=1e4 "
                      "matrix %.3g (bound %.0e), zeros %.3g (bound %.0e)",
                      det_err, kLimitDetTol, prod_err, kLaguerreProductTol, decreasing ? "yes" : "no", terminal_m,
                      kLaguerreMatrixTerminalBound, terminal_z, kLaguerreZeroTerminalBound)};
}

Outcome determinism() {
    const EnsembleParams p(3, 1.0, 1.0, 100.0);
    cli::SampleOptions o = clt_options(5000, kAcceptanceSeed);
    o.n_chains = 2;
    std::ostringstream csv1;
    std::ostringstream csv2;
    const std::string s1 = cli::cmd_sample(p, o, &csv1).payload().dump();
    const std::string s2 = cli::cmd_sample(p, o, &csv2).payload().dump();
    cli::SampleOptions other = o;
    other.seed = kAcceptanceSeed + 1;
    std::ostringstream csv3;
    cli::cmd_sample(p, other, &csv3);

    const cli::SampleOptions c = clt_options(20000, kAcceptanceSeed);
    const std::string c1 = cli::cmd_clt(p.with_kappa(500.0), c).payload().dump();
    const std::string c2 = cli::cmd_clt(p.with_kappa(500.0), c).payload().dump();

    const bool csv_same = csv1.str() == csv2.str();
    const bool sample_same = s1 == s2;
    const bool clt_same = c1 == c2;
    const bool seed_matters = csv3.str() != csv1.str();
    return {csv_same && sample_same && clt_same && seed_matters,
            fmt("csv identical %s (%zu bytes); sample payload identical %s; clt payload identical %s; other seed "
                "differs %s",
                csv_same ? "yes" : "no", csv1.str().size(), sample_same ? "yes" : "no", clt_same ? "yes" : "no",
                seed_matters ? "yes" : "no")};
}

struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
};

constexpr Criterion kCriteria[] = {
    {1, "stationarity", stationarity},
    {2, "discriminant_identity", discriminant},
    {3, "product_identities", products},
    {4, "determinant_algebraic", determinant_s},
    {5, "spectrum_trigonometric", spectrum},
    {6, "eigenvector_structure", eigenvectors},
    {7, "cross_coordinate_relation", cross_relation},
    {8, "selberg_normalization", normalization},
    {9, "law_of_large_numbers", law_of_large_numbers},
    {10, "central_limit_covariance", central_limit},
    {11, "hermite_limit", hermite_limit},
    {12, "laguerre_limit", laguerre_limit},
    {13, "determinism", determinism},
};

} // namespace

std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (const Criterion& c : kCriteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back({c.id, c.title, o.pass, o.detail, secs});
        if (on_result) on_result(out.back());
    }
    return out;
}

} // namespace freezing::acceptance
