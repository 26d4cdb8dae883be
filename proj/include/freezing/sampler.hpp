#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "freezing/params.hpp"
#include "freezing/precision.hpp"

namespace freezing {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct SamplerConfig {
    explicit SamplerConfig(EnsembleParams p) : params(p) {}
    EnsembleParams params;
    int n_samples = 10000;  // retained rows M, summed over chains
    int burn_in = 1000;     // per chain
    int thinning = 10;
    /// Per-coordinate standard deviation of the Gaussian random-walk proposal.
    /// Unset means 2.4 / sqrt(kappa * lambda_max(S)).
    std::optional<double> step_scale;
    std::uint64_t seed = 0x5eed;
    int n_chains = 1;
};

/// Default proposal scale 2.4 / sqrt(kappa * lambda_max(S)).
double default_step_scale(const EnsembleParams& params);

struct ChainInfo {
    int chain_id;
    std::uint64_t sub_seed;
    int first_row;
    int rows;
    double acceptance_rate;
};

/// M ordered points of an alcove: rows ascending in [-1, 1] for the algebraic
/// frame, descending in [0, pi/2] for the trigonometric one.
struct SampleBatch {
    SampleBatch(Coordinates c, EnsembleParams p) : coords(c), params(p) {}

    Coordinates coords;
    EnsembleParams params;
    RowMatrix data;
    double acceptance_rate = 0.0;
    double step_scale = 0.0;
    std::uint64_t seed = 0;
    std::vector<ChainInfo> chains;

    int rows() const noexcept { return static_cast<int>(data.rows()); }
    int dim() const noexcept { return static_cast<int>(data.cols()); }

    /// True when the acceptance rate is outside [0.01, 0.99].
    bool acceptance_degenerate() const noexcept { return acceptance_rate < 0.01 || acceptance_rate > 0.99; }
};

/// Unnormalized log density of the ensemble at x, or -inf outside the open
/// ordered alcove:
///   kappa sum_{i<j} log(x_j - x_i)
///   + sum_i (kappa(a+b)/2 - 1/2) log(1 - x_i) + (kappa b/2 - 1/2) log(1 + x_i).
double log_density(std::span<const double> x, const EnsembleParams& params);

/// Sub-seed of chain `chain_id`, a splitmix64 mix of (seed, chain_id).
std::uint64_t chain_seed(std::uint64_t seed, int chain_id);

/// Random-walk Metropolis on the exact ensemble density, started at the
/// freezing point. Chains run on their own threads with private RNG state and
/// are concatenated in chain_id order, so the result depends only on the
/// config. Throws DomainError on an invalid config.
SampleBatch sample_mcmc(const SamplerConfig& config);

/// Maps each row through t_j = arccos(x_j)/2 (descending in the trig alcove).
SampleBatch to_trigonometric(const SampleBatch& batch);

struct BatchStatistics {
    Eigen::VectorXd mean;
    Eigen::MatrixXd covariance;  // denominator M - 1
    Eigen::VectorXd standard_errors;
};

/// Mean, covariance and standard errors of scale * (row - center).
/// Throws ShapeError if center has the wrong length or the batch has < 2 rows.
BatchStatistics batch_statistics(const SampleBatch& batch, std::span<const double> center, double scale);

/// Lag-1 autocorrelation of each coordinate, computed within chains and pooled.
Eigen::VectorXd lag1_autocorrelation(const SampleBatch& batch);

/// CSV export: '#'-prefixed metadata lines, then one row per sample printed
/// with 17 significant digits.
void write_csv(std::ostream& os, const SampleBatch& batch);

/// Reads the data rows of a CSV produced by write_csv (metadata lines are skipped).
RowMatrix read_csv_rows(std::istream& is);

} // namespace freezing
