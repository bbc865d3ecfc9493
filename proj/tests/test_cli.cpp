#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gcop/report.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + GCOP_CLI_PATH + " " + args +
                            " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t nread;
    while ((nread = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, nread);
    const int status = pclose(pipe);
    RunResult r;
    r.out = out;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("element: hw closed vs oracle") {
    const RunResult r =
        run("element --algebra hw -n 0 -m 0 --z 1,0 --oracle --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["closed"]["re"].get<double>() - std::exp(-0.5)) <= 1e-12);
    CHECK(std::abs(j["closed"]["im"].get<double>()) <= 1e-15);
    CHECK(j["abs_diff"].get<double>() <= 1e-9);
    CHECK(j["oracle"]["est_error"].get<double>() <= 1e-10);
}

TEST_CASE("element: su2 text output") {
    const RunResult r = run("element --algebra su2 --spin 0.5 -n 1 -m 0 --z 0.7,0");
    CHECK(r.exit_code == 0);
    double re = 0.0, im = 0.0;
    CHECK(std::sscanf(r.out.c_str(), "closed = %lf,%lf", &re, &im) == 2);
    CHECK(std::abs(re - std::sin(0.7)) <= 1e-12);
    CHECK(im == 0.0);
}

TEST_CASE("element: su11 identity at z = 0") {
    const RunResult r = run("element --algebra su11 --spin 1 -n 0 -m 0 --z 0,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 12) == "closed = 1,0");
}

TEST_CASE("element: t != 0 routes to the oracle only") {
    const RunResult r = run(
        "element --algebra su11 --spin 0.75 -n 0 -m 0 --z 0,0 --t 1.0 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK_FALSE(j.contains("closed"));
    CHECK(std::abs(j["oracle"]["re"].get<double>() - std::cos(1.5)) <= 1e-10);
    CHECK(std::abs(j["oracle"]["im"].get<double>() - std::sin(1.5)) <= 1e-10);
}

TEST_CASE("element: usage errors exit 4") {
    CHECK(run("element --algebra hw -n 0 -m 0").exit_code == 4); // missing --z
    CHECK(run("element --algebra nope -n 0 -m 0 --z 1,0").exit_code == 4);
    CHECK(run("element --algebra su11 -n 0 -m 0 --z 1,0").exit_code == 4); // no spin
    CHECK(run("element --algebra su2 --spin 0.5 -n 2 -m 0 --z 1,0").exit_code == 4);
    CHECK(run("element --algebra hw -n 0 -m 0 --z 1,0 --format csv").exit_code == 4);
}

TEST_CASE("element: ORACLE_DIM_MAX forces non-convergence, exit 3") {
    const RunResult r = run("element --algebra su11 --spin 0.75 -n 0 -m 0 --z 1,0 --oracle",
                            "ORACLE_DIM_MAX=8");
    CHECK(r.exit_code == 3);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["error"] == "no_convergence");
}

TEST_CASE("sweep: csv output round-trips byte-identically") {
    const std::string path = "gcop_test_sweep.csv";
    std::remove(path.c_str());
    const RunResult r = run("sweep --algebra hw --n-max 1 --m-max 1 --re-min 0 "
                            "--re-max 2 --re-steps 5 --im-min 0 --im-max 1 --im-steps 2 "
                            "--source both --out " + path);
    CHECK(r.exit_code == 0);
    const std::string text = slurp(path);
    const std::vector<gcop::SweepRow> rows = gcop::parse_sweep_csv(text);
    CHECK(rows.size() == 2 * 2 * 5 * 2 * 2);
    std::string again = gcop::sweep_csv_header() + "\n";
    for (const gcop::SweepRow& row : rows) again += gcop::sweep_csv_line(row) + "\n";
    CHECK(again == text);
    std::remove(path.c_str());
}

TEST_CASE("sweep: |<0|U(z)|0>|^2 matches exp(-|z|^2) on an 11-point line") {
    const RunResult r = run("sweep --algebra hw --re-min 0 --re-max 2 --re-steps 11");
    CHECK(r.exit_code == 0);
    const std::vector<gcop::SweepRow> rows = gcop::parse_sweep_csv(r.out);
    CHECK(rows.size() == 11);
    for (const gcop::SweepRow& row : rows) {
        CHECK(row.status == "ok");
        CHECK(std::abs(row.abs2 - std::exp(-(row.re_z * row.re_z))) <= 1e-12);
    }
}

TEST_CASE("sweep: su2 rows at the tan pole are flagged but keep values") {
    const RunResult r = run("sweep --algebra su2 --spin 0.5 --n-max 1 "
                            "--re-min 1.5707963267948966 --re-steps 1");
    CHECK(r.exit_code == 0);
    const std::vector<gcop::SweepRow> rows = gcop::parse_sweep_csv(r.out);
    CHECK(rows.size() == 2);
    for (const gcop::SweepRow& row : rows) {
        CHECK(row.status == "pole");
        CHECK(row.has_value);
    }
    // kappa-form value: <1|W|0> = sin(pi/2) = 1
    CHECK(std::abs(rows[1].re_val - 1.0) <= 1e-12);
}

TEST_CASE("sweep: empty grid is a usage error") {
    CHECK(run("sweep --algebra hw --re-steps 0").exit_code == 4);
}

TEST_CASE("verify: seeded reports are byte-identical") {
    const std::string p1 = "gcop_test_verify1.json";
    const std::string p2 = "gcop_test_verify2.json";
    std::remove(p1.c_str());
    std::remove(p2.c_str());
    const std::string args =
        "verify --suite factorization --m-max 3 --seed 7 --format json --out ";
    CHECK(run(args + p1).exit_code == 0);
    CHECK(run(args + p2).exit_code == 0);
    const std::string a = slurp(p1);
    CHECK(a == slurp(p2));
    CHECK(a.find("\"failed\": 0") != std::string::npos);
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("identities: subset run with explicit seed") {
    const RunResult r = run("identities --suite group_law --seed 3 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["failed"].get<int>() == 0);
    CHECK(j["suites"].size() == 1);
    CHECK(j["suites"][0]["suite"] == "group_law");
}

TEST_CASE("config file supplies flags, command line wins") {
    const std::string cfg = "gcop_test_cfg.ini";
    {
        std::ofstream out(cfg);
        out << "[element]\n";
        out << "z=\"1,0\"\n"; // quoted so the comma is not a list separator
        out << "bra=2\n";
        out << "algebra=hw\n";
    }
    // config sets n=2: closed = e^{-1/2}/sqrt(2)
    const RunResult r1 = run("element --config " + cfg);
    CHECK(r1.exit_code == 0);
    double re = 0.0, im = 0.0;
    CHECK(std::sscanf(r1.out.c_str(), "closed = %lf,%lf", &re, &im) == 2);
    CHECK(std::abs(re - std::exp(-0.5) / std::sqrt(2.0)) <= 1e-12);
    // explicit -n 0 overrides the config value
    const RunResult r2 = run("element --config " + cfg + " -n 0");
    CHECK(r2.exit_code == 0);
    CHECK(std::sscanf(r2.out.c_str(), "closed = %lf,%lf", &re, &im) == 2);
    CHECK(std::abs(re - std::exp(-0.5)) <= 1e-12);
    std::remove(cfg.c_str());
}
