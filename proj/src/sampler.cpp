#include "freezing/sampler.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "freezing/errors.hpp"
#include "freezing/freeze_point.hpp"
#include "freezing/spectral.hpp"

namespace freezing {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct ChainResult {
    RowMatrix rows;
    long accepted = 0;
    long proposed = 0;
};

ChainResult run_chain(const EnsembleParams& params, std::span<const double> start, double step, int burn_in,
                      int thinning, int rows, std::uint64_t sub_seed) {
    const int n = params.n();
    std::mt19937_64 rng(sub_seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    std::vector<double> x(start.begin(), start.end());
    std::vector<double> proposal(n);
    double lp = log_density(x, params);

    ChainResult out;
    out.rows.resize(rows, n);

    const auto advance = [&](bool count) {
        for (int i = 0; i < n; ++i) proposal[i] = x[i] + step * normal(rng);
        const double lp_new = log_density(proposal, params);
        // always draw the uniform so the stream layout does not depend on the outcome
        const double u = uniform(rng);
        const bool accept = lp_new > -std::numeric_limits<double>::infinity() && std::log(u) < lp_new - lp;
        if (accept) {
            x.swap(proposal);
            lp = lp_new;
        }
        if (count) {
            ++out.proposed;
            out.accepted += accept ? 1 : 0;
        }
    };

    for (int s = 0; s < burn_in; ++s) advance(false);
    for (int r = 0; r < rows; ++r) {
        for (int s = 0; s < thinning; ++s) advance(true);
        for (int i = 0; i < n; ++i) out.rows(r, i) = x[i];
    }
    return out;
}

} // namespace

double log_density(std::span<const double> x, const EnsembleParams& params) {
    constexpr double kOutside = -std::numeric_limits<double>::infinity();
    const std::size_t n = x.size();
    const double kappa = params.kappa();
    const double upper = 0.5 * kappa * (params.a() + params.b()) - 0.5;
    const double lower = 0.5 * kappa * params.b() - 0.5;

    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (!(x[j] > -1.0 && x[j] < 1.0)) return kOutside;
        if (j > 0 && !(x[j] > x[j - 1])) return kOutside;
        for (std::size_t i = 0; i < j; ++i) acc += kappa * std::log(x[j] - x[i]);
        acc += upper * std::log1p(-x[j]) + lower * std::log1p(x[j]);
    }
    return acc;
}

std::uint64_t chain_seed(std::uint64_t seed, int chain_id) {
    return splitmix64(splitmix64(seed) ^ (static_cast<std::uint64_t>(chain_id) + 1) * 0xd1b54a32d192ed03ULL);
}

double default_step_scale(const EnsembleParams& params) {
    const FreezePoint freeze(params);
    const double lambda_max = symmetric_eigendecompose(build_algebraic(freeze).entries).eigenvalues.maxCoeff();
    return 2.4 / std::sqrt(params.kappa() * lambda_max);
}

SampleBatch sample_mcmc(const SamplerConfig& config) {
    if (config.n_samples < 1) throw DomainError("sampler: n_samples must be >= 1");
    if (config.burn_in < 0) throw DomainError("sampler: burn_in must be >= 0");
    if (config.thinning < 1) throw DomainError("sampler: thinning must be >= 1");
    if (config.n_chains < 1) throw DomainError("sampler: n_chains must be >= 1");
    if (config.n_chains > config.n_samples) throw DomainError("sampler: n_chains must not exceed n_samples");
    const double step = config.step_scale.value_or(default_step_scale(config.params));
    if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("sampler: step_scale must be > 0");

    const FreezePoint freeze(config.params);
    const int chains = config.n_chains;
    const int base = config.n_samples / chains;
    const int extra = config.n_samples % chains;

    std::vector<ChainResult> results(chains);
    std::vector<std::uint64_t> seeds(chains);
    {
        std::vector<std::jthread> workers;
        workers.reserve(chains);
        for (int c = 0; c < chains; ++c) {
            seeds[c] = chain_seed(config.seed, c);
            const int rows = base + (c < extra ? 1 : 0);
            workers.emplace_back([&, c, rows] {
                results[c] = run_chain(config.params, freeze.z(), step, config.burn_in, config.thinning, rows, seeds[c]);
            });
        }
    }

    SampleBatch batch{Coordinates::Algebraic, config.params};
    batch.data.resize(config.n_samples, config.params.n());
    batch.step_scale = step;
    batch.seed = config.seed;
    long accepted = 0;
    long proposed = 0;
    int offset = 0;
    for (int c = 0; c < chains; ++c) {
        const ChainResult& r = results[c];
        const int rows = static_cast<int>(r.rows.rows());
        batch.data.middleRows(offset, rows) = r.rows;
        const double rate = r.proposed > 0 ? static_cast<double>(r.accepted) / r.proposed : 0.0;
        batch.chains.push_back({c, seeds[c], offset, rows, rate});
        offset += rows;
        accepted += r.accepted;
        proposed += r.proposed;
    }
    batch.acceptance_rate = proposed > 0 ? static_cast<double>(accepted) / proposed : 0.0;
    return batch;
}

SampleBatch to_trigonometric(const SampleBatch& batch) {
    if (batch.coords != Coordinates::Algebraic) throw ShapeError("to_trigonometric: batch is already trigonometric");
    SampleBatch out = batch;
    out.coords = Coordinates::Trigonometric;
    out.data = (0.5 * batch.data.array().acos()).matrix();
    return out;
}

BatchStatistics batch_statistics(const SampleBatch& batch, std::span<const double> center, double scale) {
    const int m = batch.rows();
    const int n = batch.dim();
    if (static_cast<int>(center.size()) != n) throw ShapeError("batch_statistics: center has wrong length");
    if (m < 2) throw ShapeError("batch_statistics: need at least 2 rows for a covariance");
    if (!(scale > 0.0)) throw DomainError("batch_statistics: scale must be > 0");

    const Eigen::Map<const Eigen::RowVectorXd> c(center.data(), n);
    const Eigen::MatrixXd dev = scale * (batch.data.rowwise() - c);
    BatchStatistics st;
    st.mean = dev.colwise().mean().transpose();
    const Eigen::MatrixXd centered = dev.rowwise() - st.mean.transpose();
    st.covariance = (centered.transpose() * centered) / static_cast<double>(m - 1);
    st.covariance = 0.5 * (st.covariance + st.covariance.transpose());
    st.standard_errors = (st.covariance.diagonal() / static_cast<double>(m)).array().sqrt();
    return st;
}

Eigen::VectorXd lag1_autocorrelation(const SampleBatch& batch) {
    const int n = batch.dim();
    Eigen::VectorXd num = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd den = Eigen::VectorXd::Zero(n);
    std::vector<ChainInfo> chains = batch.chains;
    if (chains.empty()) chains.push_back({0, batch.seed, 0, batch.rows(), batch.acceptance_rate});
    for (const ChainInfo& ch : chains) {
        if (ch.rows < 2) continue;
        const auto block = batch.data.middleRows(ch.first_row, ch.rows);
        const Eigen::RowVectorXd mean = block.colwise().mean();
        const Eigen::MatrixXd centered = block.rowwise() - mean;
        for (int i = 0; i < n; ++i) {
            den(i) += centered.col(i).squaredNorm();
            num(i) += centered.col(i).head(ch.rows - 1).dot(centered.col(i).tail(ch.rows - 1));
        }
    }
    return (num.array() / den.array()).matrix();
}

void write_csv(std::ostream& os, const SampleBatch& batch) {
    char buf[64];
    const auto fmt = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    os << "# freezing sample batch\n";
    os << "# coords=" << to_string(batch.coords) << "\n";
    os << "# N=" << batch.params.n() << " a=" << fmt(batch.params.a()) << " b=" << fmt(batch.params.b())
       << " kappa=" << fmt(batch.params.kappa()) << "\n";
    os << "# seed=" << batch.seed << " chains=" << batch.chains.size() << " rows=" << batch.rows() << "\n";
    os << "# step_scale=" << fmt(batch.step_scale) << " acceptance=" << fmt(batch.acceptance_rate) << "\n";
    for (int r = 0; r < batch.rows(); ++r) {
        for (int i = 0; i < batch.dim(); ++i) {
            if (i > 0) os << ',';
            os << fmt(batch.data(r, i));
        }
        os << '\n';
    }
}

RowMatrix read_csv_rows(std::istream& is) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line.front() == '#') continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        if (!rows.empty() && row.size() != rows.front().size()) throw ShapeError("read_csv_rows: ragged rows");
        rows.push_back(std::move(row));
    }
    RowMatrix out(static_cast<Eigen::Index>(rows.size()), rows.empty() ? 0 : static_cast<Eigen::Index>(rows[0].size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t i = 0; i < rows[r].size(); ++i) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) = rows[r][i];
    }
    return out;
}

} // namespace freezing
