#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(JFREEZE_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (const std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("zeros emits one JSON document") {
    const Run r = run("zeros --n 2 --a 0 --b 1 --format json");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "zeros");
    CHECK(j["all_pass"] == true);
    CHECK(j["results"]["z"][0].get<double>() == doctest::Approx(-0.5773502692));
    CHECK(j.contains("timestamp"));
    CHECK(j.contains("version"));
}

TEST_CASE("text output for N = 1") {
    const Run r = run("zeros --n 1 --a 1 --b 1");
    CHECK(r.status == 0);
    CHECK(r.out.find("-0.3333333333333333") != std::string::npos);
}

TEST_CASE("usage and parameter errors exit with 2") {
    CHECK(run("zeros --n 1 --a 1 --b 0").status == 2);
    CHECK(run("zeros --n 1 --a 1").status == 2);
    CHECK(run("bogus").status == 2);
    CHECK(run("zeros --n 2 --a 0 --b 1 --format yaml").status == 2);
    CHECK(run("limits laguerre --n 2 --beta 50 --alphas 10").status == 2);
    CHECK(run("--help").status == 0);
}

TEST_CASE("failed checks exit with 1") {
    // 100 samples from a single chain cannot meet the covariance threshold.
    const Run r = run("clt --n 3 --a 1 --b 1 --kappa 500 --m 100 --chains 1 --seed 3 --format json");
    CHECK(r.status == 1);
    CHECK(nlohmann::json::parse(r.out)["all_pass"] == false);
}

TEST_CASE("sample output is byte-identical across runs") {
    const std::string base = "sample --n 3 --a 1 --b 1 --kappa 100 --m 4000 --chains 2 --seed 42 --format json --out ";
    const Run a = run(base + "cli_sample_a.csv");
    const Run b = run(base + "cli_sample_b.csv");
    CHECK(a.status == 0);
    CHECK(slurp("cli_sample_a.csv") == slurp("cli_sample_b.csv"));
    auto ja = nlohmann::json::parse(a.out);
    auto jb = nlohmann::json::parse(b.out);
    ja.erase("timestamp");
    jb.erase("timestamp");
    CHECK(ja.dump() == jb.dump());
    CHECK(ja["seed"] == 42);
}

TEST_CASE("seed defaults to the environment override") {
    const Run r = run("sample --n 2 --a 0 --b 1 --kappa 10 --m 500 --format json");
    CHECK(nlohmann::json::parse(r.out)["seed"] == 1);
    const std::string cmd = std::string("JFREEZE_SEED=77 ") + JFREEZE_BIN +
                            " sample --n 2 --a 0 --b 1 --kappa 10 --m 500 --format json";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (const std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    pclose(pipe);
    CHECK(nlohmann::json::parse(out)["seed"] == 77);
}

TEST_CASE("limits and normalization subcommands") {
    const Run h = run("limits hermite --n 2 --format json");
    CHECK(h.status == 0);
    CHECK(nlohmann::json::parse(h.out)["results"]["det"].get<double>() == doctest::Approx(2.0));
    const Run n = run("normalization --n 1 --a 1 --b 1 --kappas 1,10,100 --format json");
    CHECK(n.status == 0);
    CHECK(nlohmann::json::parse(n.out)["results"]["table"].size() == 3);
}
