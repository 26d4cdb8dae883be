#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>


namespace freezing::acceptance {

// Frozen tolerances of the acceptance grid.
inline constexpr double kStationarityTol = 1e-10;
inline constexpr double kLogPhiTol = 1e-10;
inline constexpr double kProductRelTol = 1e-11;
inline constexpr double kLogDetPerDimTol = 1e-9;
inline constexpr double kSpectrumRelTol = 1e-8;
inline constexpr double kEigenvectorTol = 1e-8;
inline constexpr double kCrossRelationTol = 1e-10;
inline constexpr double kBetaOracleTol = 1e-10;
inline constexpr double kQuadratureOracleTol = 1e-6;
inline constexpr double kGaussianIdentityTol = 1e-10;
inline constexpr double kLimitDetTol = 1e-8;
inline constexpr double kLaguerreProductTol = 1e-10;
inline constexpr double kGramTol = 1e-9;

// Calibrated with a fixed-seed pre-run (N=3, a=b=1, kappa=500, M=2e5):
// measured relative Frobenius errors were 0.002-0.0063 over six seeds.
inline constexpr double kCltFrobeniusThreshold = 0.02;
// Terminal bounds of the limit-transition sweeps at alpha = 1e4.
inline constexpr double kHermiteTerminalBound = 1e-3;
inline constexpr double kLaguerreMatrixTerminalBound = 3e-3;
inline constexpr double kLaguerreZeroTerminalBound = 4e-2;

inline constexpr std::array<int, 8> kGridN = {1, 2, 3, 5, 8, 16, 32, 64};
inline constexpr std::array<std::pair<double, double>, 4> kGridAB = {{{0.0, 1.0}, {1.0, 1.0}, {2.0, 0.5}, {0.5, 3.0}}};

// Sampler setup of the CLT run; also the defaults of the `clt` command.
inline constexpr int kCltSamples = 200000;
inline constexpr int kCltBurnIn = 2000;
inline constexpr int kCltThinning = 10;
inline constexpr int kCltChains = 4;

inline constexpr std::uint64_t kAcceptanceSeed = 20240611;

struct CriterionResult {
    int id;
    std::string title;
    bool pass;
    std::string detail;
    double seconds;
};

/// Runs every acceptance criterion in order. `on_result` (if set) is called as
/// each criterion finishes.
std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_result = {});

} // namespace freezing::acceptance
