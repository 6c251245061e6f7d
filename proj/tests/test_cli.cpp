#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "elfkit/chebyshev_reference.hpp"
#include "elfkit/run_commands.hpp"
#include "test_util.hpp"

using namespace elfkit;
using namespace elfkit_test;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::vector<std::string> fields;
        std::istringstream fs(line);
        std::string field;
        while (std::getline(fs, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.push_back("");
        rows.push_back(std::move(fields));
    }
    return rows;
}

int run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"elfkit"};
    argv.insert(argv.end(), args.begin(), args.end());
    return cli_main(static_cast<int>(argv.size()), argv.data());
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/elfkit_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli({"vrf-curve", "--bogus"}) == 2);
    CHECK(run_cli({"vrf-curve"}) == 2);  // missing required flags
    CHECK(run_cli({"nonsense"}) == 2);
    TempFile out("usage.csv");
    CHECK(run_cli({"vrf-curve", "--scheme", "xy", "--L", "1", "--out", out.path.c_str()}) == 2);
    CHECK(run_cli({"vrf-curve", "--scheme", "ab", "--L", "0", "--out", out.path.c_str()}) == 2);
    CHECK(run_cli({"vrf-curve", "--scheme", "ab", "--L", "1", "--sigma", "-0.5", "--out",
                   out.path.c_str()}) == 2);
    CHECK(run_cli({"validate", "--level", "medium"}) == 2);
}

TEST_CASE("vrf-curve output") {
    TempFile out("curve.csv");
    VrfCurveConfig cfg;
    cfg.schemes = {Scheme::AB};
    cfg.L = 1;
    cfg.sigmas = {0.2, 0.1};
    cfg.mu_points = 9;
    cfg.restarts = 2;
    cfg.seed = 5;
    cfg.out_path = out.path;
    run_vrf_curve(cfg);

    const std::string text = slurp(out.path);
    CHECK(text.find('\r') == std::string::npos);
    const auto rows = parse_csv(text);
    REQUIRE(rows.size() == 1 + 2 * 2 * 9);
    CHECK(rows[0] == std::vector<std::string>{"scheme", "variant", "L", "sigma", "mu", "V",
                                              "epv", "x_star"});

    const ClfSpec spec = ClfSpec::make(Scheme::AB, 1);
    std::size_t clf_rows = 0, elf_rows = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == 8);
        CHECK(rows[i][0] == "AB");
        const double sigma = std::stod(rows[i][3]);
        const double mu = std::stod(rows[i][4]);
        const double v = std::stod(rows[i][5]);
        const double epv = std::stod(rows[i][6]);
        const double s2 = sigma * sigma;
        CHECK(std::abs(epv - s2 * (1.0 - s2 * v)) < 1e-12);
        if (rows[i][1] == "CLF") {
            ++clf_rows;
            CHECK(rows[i][7].empty());
            CHECK(std::abs(v - clf_vrf(spec, mu, sigma)) < 1e-12);
        } else {
            ++elf_rows;
            CHECK_FALSE(rows[i][7].empty());
        }
    }
    CHECK(clf_rows == 18);
    CHECK(elf_rows == 18);

    // Sorted by (scheme, variant, sigma, mu): CLF block first, sigma ascending.
    CHECK(rows[1][1] == "CLF");
    CHECK(std::stod(rows[1][3]) == doctest::Approx(0.1));
    CHECK(rows[19][1] == "ELF");

    // The smallest AB problem: optimized equals baseline everywhere.
    for (std::size_t i = 1; i <= 18; ++i) {
        const double v_clf = std::stod(rows[i][5]);
        const double v_elf = std::stod(rows[i + 18][5]);
        CHECK(rows[i][4] == rows[i + 18][4]);
        CHECK(std::abs(v_elf - v_clf) < 1e-9);
        CHECK(v_elf >= v_clf - 1e-9);
    }
}

TEST_CASE("vrf-curve is byte-deterministic for a fixed seed") {
    TempFile out1("det1.csv");
    TempFile out2("det2.csv");
    for (const std::string& path : {out1.path, out2.path}) {
        VrfCurveConfig cfg;
        cfg.schemes = {Scheme::AF};
        cfg.L = 1;
        cfg.sigmas = {0.2};
        cfg.mu_points = 7;
        cfg.restarts = 2;
        cfg.seed = 1234;
        cfg.out_path = path;
        run_vrf_curve(cfg);
    }
    CHECK(slurp(out1.path) == slurp(out2.path));
}

TEST_CASE("bias-curve output") {
    TempFile out("bias.csv");

    SUBCASE("all-pi/2 angles against the closed form") {
        BiasCurveConfig cfg;
        cfg.scheme = Scheme::AB;
        cfg.L = 2;
        cfg.theta_points = 41;
        cfg.out_path = out.path;
        run_bias_curve(cfg);

        const auto rows = parse_csv(slurp(out.path));
        REQUIRE(rows.size() == 1 + 41 + 1);
        CHECK(rows[0] == std::vector<std::string>{"theta", "lambda_direct", "lambda_series",
                                                  "abs_diff"});
        const ClfSpec spec = ClfSpec::make(Scheme::AB, 2);
        for (std::size_t i = 1; i <= 41; ++i) {
            const double theta = std::stod(rows[i][0]);
            const double direct = std::stod(rows[i][1]);
            CHECK(std::abs(direct - clf_bias(spec, theta)) < 1e-12);
        }
        const auto& last = rows.back();
        REQUIRE(last.size() == 4);
        CHECK(last[0] == "summary");
        CHECK(std::stod(last[3]) < 1e-10);
    }

    SUBCASE("fidelity damps both columns") {
        BiasCurveConfig cfg;
        cfg.scheme = Scheme::AF;
        cfg.L = 1;
        cfg.x = {0.4, 1.0};
        cfg.theta_points = 11;
        cfg.fidelity = 0.5;
        cfg.out_path = out.path;
        run_bias_curve(cfg);
        const auto noisy = parse_csv(slurp(out.path));

        cfg.fidelity = 1.0;
        run_bias_curve(cfg);
        const auto clean = parse_csv(slurp(out.path));

        for (std::size_t i = 1; i <= 11; ++i) {
            CHECK(std::stod(noisy[i][1]) ==
                  doctest::Approx(0.5 * std::stod(clean[i][1])).epsilon(1e-12));
            CHECK(std::stod(noisy[i][2]) ==
                  doctest::Approx(0.5 * std::stod(clean[i][2])).epsilon(1e-12));
        }
    }

    SUBCASE("mismatched angle count is a usage error") {
        CHECK(run_cli({"bias-curve", "--scheme", "af", "--L", "2", "--x", "0.1,0.2", "--out",
                       out.path.c_str()}) == 2);
    }
}

TEST_CASE("validate command") {
    TempFile json("report.json");
    CHECK(run_cli({"validate", "--level", "fast", "--json", json.path.c_str()}) == 0);
    const std::string report = slurp(json.path);
    CHECK(report.find("\"passed\": true") != std::string::npos);
    CHECK(report.find("\"level\": \"fast\"") != std::string::npos);
}
