#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "freezing/params.hpp"
#include "freezing/report.hpp"

// One function per CLI subcommand. Each returns a RunReport without a
// timestamp; the tool stamps it on output.

namespace freezing::cli {

struct SampleOptions {
    int n_samples = 10000;
    std::uint64_t seed = 1;
    int burn_in = 1000;
    int thinning = 10;
    int n_chains = 1;
    std::optional<double> step_scale;
};

enum class LimitMode { Hermite, Laguerre };

RunReport cmd_zeros(const EnsembleParams& params);
RunReport cmd_precision(const EnsembleParams& params);
RunReport cmd_spectrum(const EnsembleParams& params);

/// Runs the sampler; when `csv` is non-null the batch is written to it.
RunReport cmd_sample(const EnsembleParams& params, const SampleOptions& options, std::ostream* csv);

/// Sample, rescale by sqrt(kappa) around the freezing point and compare the
/// empirical covariances with S^-1 and S~^-1.
RunReport cmd_clt(const EnsembleParams& params, const SampleOptions& options);

RunReport cmd_limits(LimitMode mode, int n, double beta, const std::vector<double>& alphas);

/// `params.kappa()` is ignored; the table runs over `kappas`.
RunReport cmd_normalization(const EnsembleParams& params, const std::vector<double>& kappas);

/// Runs the full acceptance grid; one check per criterion.
RunReport cmd_verify_all();

/// Default seed: $JFREEZE_SEED when set and parseable, otherwise 1.
std::uint64_t default_seed();

} // namespace freezing::cli
