// jacobi-freeze: verification reports for the frozen beta-Jacobi ensemble.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "freezing/acceptance.hpp"
#include "freezing/commands.hpp"
#include "freezing/errors.hpp"

namespace {

using namespace freezing;

constexpr int kExitUsage = 2;

struct Common {
    int n = 0;
    double a = 0.0;
    double b = 0.0;
    double kappa = 1.0;
    std::string format = "text";
};

void add_params(CLI::App* sub, Common& c, bool with_kappa) {
    sub->add_option("--n", c.n, "Number of particles N (>= 1)")->required();
    sub->add_option("--a", c.a, "Shape parameter a (>= 0)")->required();
    sub->add_option("--b", c.b, "Shape parameter b (> 0)")->required();
    if (with_kappa) sub->add_option("--kappa", c.kappa, "Freezing parameter kappa (> 0)")->required();
}

void add_format(CLI::App* sub, std::string& format) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

int emit(RunReport report, const std::string& format) {
    report.timestamp = utc_timestamp();
    if (format == "json") {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        std::cout << report.to_text();
    }
    return report.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Freezing-regime verification tools for beta-Jacobi ensembles"};
    app.set_version_flag("--version", std::string(freezing::kVersion));
    app.require_subcommand(1);

    Common common;
    cli::SampleOptions sample;
    sample.seed = cli::default_seed();
    std::string csv_path;

    auto* zeros = app.add_subcommand("zeros", "Freezing point, stationarity residual and closed-form identities");
    add_params(zeros, common, false);
    add_format(zeros, common.format);

    auto* precision = app.add_subcommand("precision", "Precision matrices S and S~, cross relation, determinants");
    add_params(precision, common, false);
    add_format(precision, common.format);

    auto* spectrum = app.add_subcommand("spectrum", "Spectrum of S~ and its eigenvector structure");
    add_params(spectrum, common, false);
    add_format(spectrum, common.format);

    auto* sample_cmd = app.add_subcommand("sample", "Draw an MCMC batch from the ensemble");
    add_params(sample_cmd, common, true);
    add_format(sample_cmd, common.format);
    sample_cmd->add_option("--m", sample.n_samples, "Retained samples (summed over chains)");
    sample_cmd->add_option("--seed", sample.seed, "RNG seed (default: $JFREEZE_SEED or 1)");
    sample_cmd->add_option("--burn-in", sample.burn_in, "Burn-in steps per chain");
    sample_cmd->add_option("--thinning", sample.thinning, "Steps between retained samples");
    sample_cmd->add_option("--chains", sample.n_chains, "Number of parallel chains");
    sample_cmd->add_option("--step", sample.step_scale, "Proposal standard deviation");
    sample_cmd->add_option("--out", csv_path, "Write the batch as CSV to this path");

    cli::SampleOptions clt;
    clt.n_samples = acceptance::kCltSamples;
    clt.burn_in = acceptance::kCltBurnIn;
    clt.thinning = acceptance::kCltThinning;
    clt.n_chains = acceptance::kCltChains;
    clt.seed = cli::default_seed();
    auto* clt_cmd = app.add_subcommand("clt", "Compare the rescaled sample covariance with S^-1 and S~^-1");
    add_params(clt_cmd, common, true);
    add_format(clt_cmd, common.format);
    clt_cmd->add_option("--m", clt.n_samples, "Retained samples (summed over chains)");
    clt_cmd->add_option("--seed", clt.seed, "RNG seed (default: $JFREEZE_SEED or 1)");
    clt_cmd->add_option("--burn-in", clt.burn_in, "Burn-in steps per chain");
    clt_cmd->add_option("--thinning", clt.thinning, "Steps between retained samples");
    clt_cmd->add_option("--chains", clt.n_chains, "Number of parallel chains");
    clt_cmd->add_option("--step", clt.step_scale, "Proposal standard deviation");

    std::string mode;
    int limit_n = 0;
    double limit_beta = 0.0;
    std::vector<double> alphas = {1e2, 1e3, 1e4};
    auto* limits = app.add_subcommand("limits", "Hermite and Laguerre degenerations");
    limits->add_option("mode", mode, "hermite or laguerre")->required()->check(CLI::IsMember({"hermite", "laguerre"}));
    limits->add_option("--n", limit_n, "Number of particles N (>= 1)")->required();
    limits->add_option("--beta", limit_beta, "Laguerre parameter beta (> -1)");
    limits->add_option("--alphas", alphas, "Degeneration parameters")->delimiter(',');
    add_format(limits, common.format);

    std::vector<double> kappas = {1e2, 1e3, 1e4};
    auto* norm = app.add_subcommand("normalization", "Normalization constants and their kappa -> infinity limit");
    add_params(norm, common, false);
    add_format(norm, common.format);
    norm->add_option("--kappas", kappas, "Freezing parameters of the table")->delimiter(',');

    auto* verify = app.add_subcommand("verify-all", "Run the full acceptance grid");
    add_format(verify, common.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (zeros->parsed()) return emit(cli::cmd_zeros(EnsembleParams(common.n, common.a, common.b)), common.format);
        if (precision->parsed()) {
            return emit(cli::cmd_precision(EnsembleParams(common.n, common.a, common.b)), common.format);
        }
        if (spectrum->parsed()) {
            return emit(cli::cmd_spectrum(EnsembleParams(common.n, common.a, common.b)), common.format);
        }
        if (sample_cmd->parsed()) {
            const EnsembleParams p(common.n, common.a, common.b, common.kappa);
            if (csv_path.empty()) return emit(cli::cmd_sample(p, sample, nullptr), common.format);
            std::ofstream out(csv_path);
            if (!out) {
                std::cerr << "error: cannot open " << csv_path << " for writing\n";
                return kExitUsage;
            }
            return emit(cli::cmd_sample(p, sample, &out), common.format);
        }
        if (clt_cmd->parsed()) {
            return emit(cli::cmd_clt(EnsembleParams(common.n, common.a, common.b, common.kappa), clt), common.format);
        }
        if (limits->parsed()) {
            const auto m = mode == "hermite" ? cli::LimitMode::Hermite : cli::LimitMode::Laguerre;
            return emit(cli::cmd_limits(m, limit_n, limit_beta, alphas), common.format);
        }
        if (norm->parsed()) {
            return emit(cli::cmd_normalization(EnsembleParams(common.n, common.a, common.b), kappas), common.format);
        }
        if (verify->parsed()) return emit(cli::cmd_verify_all(), common.format);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
