#include "freezing/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

namespace freezing {

void RunReport::check_close(std::string name, double expected, double actual, double tolerance) {
    const bool pass = std::isfinite(actual) && std::fabs(actual - expected) <= tolerance;
    checks.push_back({std::move(name), expected, actual, tolerance, pass});
}

void RunReport::check_at_most(std::string name, double actual, double bound) {
    checks.push_back({std::move(name), "<= " + nlohmann::json(bound).dump(), actual, bound,
                      std::isfinite(actual) && actual <= bound});
}

void RunReport::check_at_least(std::string name, double actual, double bound) {
    checks.push_back({std::move(name), ">= " + nlohmann::json(bound).dump(), actual, bound,
                      std::isfinite(actual) && actual >= bound});
}

void RunReport::check_that(std::string name, nlohmann::json expected, nlohmann::json actual, double tolerance,
                           bool pass) {
    checks.push_back({std::move(name), std::move(expected), std::move(actual), tolerance, pass});
}

bool RunReport::all_pass() const {
    for (const Check& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

nlohmann::json RunReport::payload() const {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["version"] = kVersion;
    j["command"] = command;
    j["params"] = params;
    if (seed) j["seed"] = *seed;
    j["results"] = results;
    nlohmann::json arr = nlohmann::json::array();
    for (const Check& c : checks) {
        arr.push_back({{"name", c.name},
                       {"expected", c.expected},
                       {"actual", c.actual},
                       {"tolerance", c.tolerance},
                       {"pass", c.pass}});
    }
    j["checks"] = std::move(arr);
    j["all_pass"] = all_pass();
    return j;
}

nlohmann::json RunReport::to_json() const {
    nlohmann::json j = payload();
    j["timestamp"] = timestamp;
    return j;
}

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    os << "params:  " << params.dump() << "\n";
    if (seed) os << "seed:    " << *seed << "\n";
    for (const auto& [key, value] : results.items()) {
        std::string v = value.dump();
        if (v.size() > 160) v = v.substr(0, 157) + "...";
        os << "  " << key << " = " << v << "\n";
    }
    os << "checks:\n";
    for (const Check& c : checks) {
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": actual=" << c.actual.dump()
           << " expected=" << c.expected.dump() << " tol=" << c.tolerance << "\n";
    }
    os << (all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return os.str();
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace freezing
