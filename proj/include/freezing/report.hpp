#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace freezing {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kVersion = "1.0.0";

struct Check {
    std::string name;
    nlohmann::json expected;
    nlohmann::json actual;
    double tolerance;
    bool pass;
};

/// Machine-readable result of one CLI command. Everything except `timestamp`
/// is a deterministic function of the inputs.
struct RunReport {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::vector<Check> checks;
    std::optional<std::uint64_t> seed;
    std::string timestamp;

    /// Passes when |actual - expected| <= tolerance.
    void check_close(std::string name, double expected, double actual, double tolerance);
    /// Passes when actual <= bound; the bound is reported as the tolerance.
    void check_at_most(std::string name, double actual, double bound);
    /// Passes when actual >= bound.
    void check_at_least(std::string name, double actual, double bound);
    /// Arbitrary predicate with a descriptive expectation.
    void check_that(std::string name, nlohmann::json expected, nlohmann::json actual, double tolerance, bool pass);

    bool all_pass() const;
    int exit_code() const { return all_pass() ? 0 : 1; }

    nlohmann::json to_json() const;
    /// The deterministic part of the report (no timestamp).
    nlohmann::json payload() const;
    std::string to_text() const;
};

/// Current UTC time as ISO-8601.
std::string utc_timestamp();

} // namespace freezing
