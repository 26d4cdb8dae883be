#include <sstream>

#include "doctest.h"

#include "freezing/commands.hpp"
#include "freezing/errors.hpp"

using namespace freezing;

namespace {

const Check* find_check(const RunReport& r, const std::string& name) {
    for (const Check& c : r.checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

} // namespace

TEST_CASE("report bookkeeping") {
    RunReport r;
    r.command = "demo";
    r.check_close("close", 1.0, 1.0 + 1e-12, 1e-10);
    r.check_at_most("small", 0.5, 1.0);
    CHECK(r.all_pass());
    CHECK(r.exit_code() == 0);
    r.check_at_least("large", 0.5, 1.0);
    CHECK_FALSE(r.all_pass());
    CHECK(r.exit_code() == 1);

    r.timestamp = "2000-01-01T00:00:00Z";
    const nlohmann::json j = r.to_json();
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["timestamp"] == "2000-01-01T00:00:00Z");
    CHECK_FALSE(r.payload().contains("timestamp"));
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("tolerance"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("actual"));
    }
    CHECK(r.to_text().find("[FAIL] large") != std::string::npos);
}

TEST_CASE("non-finite values fail numeric checks") {
    RunReport r;
    r.check_at_most("nan", std::nan(""), 1.0);
    CHECK_FALSE(r.all_pass());
}

TEST_CASE("zeros command") {
    const RunReport r = cli::cmd_zeros(EnsembleParams(2, 0.0, 1.0));
    CHECK(r.all_pass());
    CHECK(r.results["z"][1].get<double>() == doctest::Approx(0.5773502692));
}

TEST_CASE("precision and spectrum commands") {
    const RunReport p = cli::cmd_precision(EnsembleParams(2, 0.0, 1.0));
    CHECK(p.all_pass());
    CHECK(p.results["det_S"].get<double>() == doctest::Approx(13.5));
    CHECK(p.results["det_S_trig"].get<double>() == doctest::Approx(96.0));
    const RunReport s = cli::cmd_spectrum(EnsembleParams(1, 1.0, 1.0));
    CHECK(s.all_pass());
    CHECK(s.results["eigenvalues_closed_form"][0].get<double>() == 6.0);
}

TEST_CASE("limits command") {
    const RunReport h = cli::cmd_limits(cli::LimitMode::Hermite, 2, 0.0, {1e2, 1e3, 1e4});
    CHECK(h.all_pass());
    CHECK(h.results["det"].get<double>() == doctest::Approx(2.0));
    const RunReport l = cli::cmd_limits(cli::LimitMode::Laguerre, 2, 0.0, {1e2, 1e3, 1e4});
    CHECK(l.all_pass());
    CHECK(l.results["det"].get<double>() == doctest::Approx(1.0));
    // N = 1 Hermite: zero distances are identically 0, so only the matrix column is compared.
    const RunReport one = cli::cmd_limits(cli::LimitMode::Hermite, 1, 0.0, {1e2, 1e3});
    CHECK(one.all_pass());
    CHECK(find_check(one, "zero_distance_strictly_decreasing") == nullptr);
    CHECK_THROWS_AS(cli::cmd_limits(cli::LimitMode::Laguerre, 2, -1.5, {1e2}), DomainError);
}

TEST_CASE("normalization command") {
    const RunReport r = cli::cmd_normalization(EnsembleParams(1, 1.0, 1.0), {1.0, 10.0, 100.0});
    CHECK(r.all_pass());
    CHECK(find_check(r, "beta_oracle_log_error") != nullptr);
    CHECK(find_check(r, "quadrature_oracle_log_error") != nullptr);
    CHECK(r.results["table"].size() == 3);
}

TEST_CASE("sample and clt commands are reproducible") {
    cli::SampleOptions o;
    o.n_samples = 3000;
    o.seed = 17;
    o.n_chains = 2;
    const EnsembleParams p(3, 1.0, 1.0, 200.0);
    std::ostringstream a;
    std::ostringstream b;
    const RunReport ra = cli::cmd_sample(p, o, &a);
    const RunReport rb = cli::cmd_sample(p, o, &b);
    CHECK(ra.all_pass());
    CHECK(a.str() == b.str());
    CHECK(ra.payload().dump() == rb.payload().dump());
    CHECK(ra.seed == 17u);

    o.n_samples = 20000;
    const RunReport c1 = cli::cmd_clt(p, o);
    const RunReport c2 = cli::cmd_clt(p, o);
    CHECK(c1.payload().dump() == c2.payload().dump());
    CHECK(c1.results["algebraic"]["relative_frobenius_error"].get<double>() < 0.2);
}
