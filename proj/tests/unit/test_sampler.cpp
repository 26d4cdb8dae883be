#include <cmath>
#include <limits>
#include <sstream>

#include "doctest.h"

#include "freezing/errors.hpp"
#include "freezing/oracles.hpp"
#include "freezing/sampler.hpp"

using namespace freezing;

namespace {

SamplerConfig small_config(const EnsembleParams& p, std::uint64_t seed, int chains = 1) {
    SamplerConfig c(p);
    c.n_samples = 2000;
    c.burn_in = 200;
    c.thinning = 5;
    c.seed = seed;
    c.n_chains = chains;
    return c;
}

} // namespace

TEST_CASE("log density matches the formula and vanishes off the alcove") {
    const EnsembleParams p(2, 1.0, 2.0, 3.0);
    const std::vector<double> x = {-0.2, 0.4};
    const double expected = 3.0 * std::log(0.6) + (3.0 * 1.5 - 0.5) * (std::log(1.2) + std::log(0.6)) +
                            (3.0 - 0.5) * (std::log(0.8) + std::log(1.4));
    CHECK(log_density(x, p) == doctest::Approx(expected).epsilon(1e-14));
    const double ninf = -std::numeric_limits<double>::infinity();
    CHECK(log_density(std::vector<double>{0.4, -0.2}, p) == ninf);
    CHECK(log_density(std::vector<double>{-1.0, 0.4}, p) == ninf);
    CHECK(log_density(std::vector<double>{-0.3, 1.2}, p) == ninf);
}

TEST_CASE("chain seeds are distinct and reproducible") {
    CHECK(chain_seed(7, 0) == chain_seed(7, 0));
    CHECK(chain_seed(7, 0) != chain_seed(7, 1));
    CHECK(chain_seed(7, 0) != chain_seed(8, 0));
}

TEST_CASE("sampler is deterministic for a fixed config") {
    const EnsembleParams p(3, 1.0, 1.0, 50.0);
    for (int chains : {1, 3}) {
        const SampleBatch a = sample_mcmc(small_config(p, 99, chains));
        const SampleBatch b = sample_mcmc(small_config(p, 99, chains));
        CHECK(a.data == b.data);
        CHECK(a.acceptance_rate == b.acceptance_rate);
        CHECK(a.rows() == 2000);
        CHECK(a.dim() == 3);
        CHECK(static_cast<int>(a.chains.size()) == chains);
    }
    CHECK(sample_mcmc(small_config(p, 99)).data != sample_mcmc(small_config(p, 100)).data);
}

TEST_CASE("chains partition the rows in chain order") {
    const SampleBatch b = sample_mcmc(small_config(EnsembleParams(2, 0.0, 1.0, 10.0), 5, 3));
    int next = 0;
    for (const ChainInfo& c : b.chains) {
        CHECK(c.first_row == next);
        CHECK(c.sub_seed == chain_seed(5, c.chain_id));
        next += c.rows;
    }
    CHECK(next == b.rows());
}

TEST_CASE("samples stay inside the ordered alcove") {
    for (auto [n, kappa] : {std::pair{1, 0.5}, {4, 2.0}, {6, 300.0}}) {
        const SampleBatch b = sample_mcmc(small_config(EnsembleParams(n, 0.5, 3.0, kappa), 1));
        for (int i = 0; i < b.rows(); ++i) {
            CHECK(b.data(i, 0) > -1.0);
            CHECK(b.data(i, n - 1) < 1.0);
            for (int j = 1; j < n; ++j) CHECK(b.data(i, j) > b.data(i, j - 1));
        }
        CHECK_FALSE(b.acceptance_degenerate());
    }
}

TEST_CASE("default tuning keeps acceptance moderate at small N") {
    for (const EnsembleParams& p : {EnsembleParams(3, 1.0, 1.0, 500.0), EnsembleParams(5, 2.0, 0.5, 100.0),
                                    EnsembleParams(5, 1.0, 1.0, 1000.0), EnsembleParams(2, 0.0, 1.0, 10.0)}) {
        const SampleBatch b = sample_mcmc(small_config(p, 2));
        CHECK(b.acceptance_rate >= 0.1);
        CHECK(b.acceptance_rate <= 0.6);
        CHECK(b.step_scale == doctest::Approx(default_step_scale(p)));
    }
}

TEST_CASE("a smaller explicit step restores acceptance where the default is too wide") {
    const EnsembleParams p(8, 0.5, 3.0, 1000.0);
    SamplerConfig c = small_config(p, 2);
    const double wide = sample_mcmc(c).acceptance_rate;
    c.step_scale = 0.4 * default_step_scale(p);
    const double narrow = sample_mcmc(c).acceptance_rate;
    CHECK(wide < 0.1);
    CHECK(narrow >= 0.1);
    CHECK(narrow <= 0.6);
}

TEST_CASE("N = 1 sample mean matches the Beta law") {
    const EnsembleParams p(1, 1.0, 1.0, 1.0);
    SamplerConfig c(p);
    c.n_samples = 100000;
    c.thinning = 5;
    c.seed = 314;
    c.n_chains = 4;
    const SampleBatch b = sample_mcmc(c);
    const std::vector<double> zero = {0.0};
    const BatchStatistics s = batch_statistics(b, zero, 1.0);
    const double rho = lag1_autocorrelation(b)(0);
    const double se = s.standard_errors(0) * std::sqrt((1.0 + rho) / (1.0 - rho));
    // E[(1 - X)/2] = p/(p+q)  =>  E[X] = 1 - 2 p/(p+q)
    const double expected = 1.0 - 2.0 * oracle::beta_mean_one_minus(p);
    CHECK(std::fabs(s.mean(0) - expected) <= 3.0 * se);
}

TEST_CASE("batch statistics on a hand-made batch") {
    SampleBatch b(Coordinates::Algebraic, EnsembleParams(2, 0.0, 1.0));
    b.data.resize(3, 2);
    b.data << 0.0, 1.0, 1.0, 3.0, 2.0, 5.0;
    const std::vector<double> center = {1.0, 1.0};
    const BatchStatistics s = batch_statistics(b, center, 2.0);
    CHECK(s.mean(0) == doctest::Approx(0.0));
    CHECK(s.mean(1) == doctest::Approx(4.0));
    CHECK(s.covariance(0, 0) == doctest::Approx(4.0));
    CHECK(s.covariance(1, 1) == doctest::Approx(16.0));
    CHECK(s.covariance(0, 1) == doctest::Approx(8.0));
    CHECK(s.standard_errors(0) == doctest::Approx(2.0 / std::sqrt(3.0)));
    CHECK_THROWS_AS(batch_statistics(b, std::vector<double>{0.0}, 1.0), ShapeError);
}

TEST_CASE("trigonometric conversion round trip") {
    const SampleBatch b = sample_mcmc(small_config(EnsembleParams(4, 1.0, 1.0, 100.0), 8));
    const SampleBatch t = to_trigonometric(b);
    CHECK(t.coords == Coordinates::Trigonometric);
    for (int i = 0; i < b.rows(); ++i) {
        for (int j = 0; j < b.dim(); ++j) {
            CHECK(std::cos(2.0 * t.data(i, j)) == doctest::Approx(b.data(i, j)).epsilon(1e-12));
            if (j > 0) CHECK(t.data(i, j) < t.data(i, j - 1));
        }
    }
    CHECK_THROWS_AS(to_trigonometric(t), ShapeError);
}

TEST_CASE("CSV export round-trips exactly") {
    const SampleBatch b = sample_mcmc(small_config(EnsembleParams(3, 0.5, 3.0, 40.0), 21));
    std::stringstream ss;
    write_csv(ss, b);
    const std::string text = ss.str();
    CHECK(text.rfind("# ", 0) == 0);
    CHECK(text.find("seed=21") != std::string::npos);
    CHECK(text.find("acceptance=") != std::string::npos);
    std::istringstream in(text);
    const RowMatrix rows = read_csv_rows(in);
    CHECK(rows == b.data);
}

TEST_CASE("sampler rejects invalid configs") {
    const EnsembleParams p(2, 0.0, 1.0, 5.0);
    SamplerConfig c = small_config(p, 1);
    c.n_samples = 0;
    CHECK_THROWS_AS(sample_mcmc(c), DomainError);
    c = small_config(p, 1);
    c.thinning = 0;
    CHECK_THROWS_AS(sample_mcmc(c), DomainError);
    c = small_config(p, 1);
    c.step_scale = -1.0;
    CHECK_THROWS_AS(sample_mcmc(c), DomainError);
    c = small_config(p, 1);
    c.n_chains = 0;
    CHECK_THROWS_AS(sample_mcmc(c), DomainError);
}
