#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "elfkit/run_commands.hpp"

namespace elfkit {

namespace {

std::vector<Scheme> parse_schemes(const std::string& value) {
    if (value == "af") return {Scheme::AF};
    if (value == "ab") return {Scheme::AB};
    if (value == "both") return {Scheme::AF, Scheme::AB};
    throw CLI::ValidationError("--scheme", "must be af, ab or both");
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"engineered likelihood functions for amplitude estimation"};
    app.require_subcommand(1);

    VrfCurveConfig vrf_cfg;
    std::string vrf_scheme = "both";
    CLI::App* vrf = app.add_subcommand(
        "vrf-curve", "variance reduction factor of optimized vs all-pi/2 angles over a mu grid");
    vrf->add_option("--scheme", vrf_scheme, "af, ab or both")->default_str("both");
    vrf->add_option("--L", vrf_cfg.L, "number of angle pairs")->required();
    vrf->add_option("--sigma", vrf_cfg.sigmas, "prior standard deviations")
        ->delimiter(',')
        ->default_str("0.5,0.2,0.1,0.05");
    vrf->add_option("--mu-points", vrf_cfg.mu_points, "interior mu grid size");
    vrf->add_option("--restarts", vrf_cfg.restarts, "random restarts per grid point");
    vrf->add_option("--seed", vrf_cfg.seed, "random seed");
    vrf->add_option("--fidelity", vrf_cfg.fidelity, "bias damping factor in [0, 1]");
    vrf->add_option("--out", vrf_cfg.out_path, "output CSV path")->required();

    BiasCurveConfig bias_cfg;
    std::string bias_scheme = "af";
    CLI::App* bias = app.add_subcommand(
        "bias-curve", "direct circuit bias against its cosine-series evaluation");
    bias->add_option("--scheme", bias_scheme, "af or ab")->required();
    bias->add_option("--L", bias_cfg.L, "number of angle pairs")->required();
    bias->add_option("--x", bias_cfg.x, "angles (default: all pi/2)")->delimiter(',');
    bias->add_option("--theta-points", bias_cfg.theta_points, "theta grid size");
    bias->add_option("--fidelity", bias_cfg.fidelity, "bias damping factor in [0, 1]");
    bias->add_option("--out", bias_cfg.out_path, "output CSV path")->required();

    ValidateConfig val_cfg;
    std::string level = "fast";
    CLI::App* validate = app.add_subcommand("validate", "run the invariant suites");
    validate->add_option("--level", level, "fast or full")->default_str("fast");
    validate->add_option("--json", val_cfg.json_path, "write a JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (vrf->parsed()) {
            vrf_cfg.schemes = parse_schemes(vrf_scheme);
            run_vrf_curve(vrf_cfg);
            return 0;
        }
        if (bias->parsed()) {
            const std::vector<Scheme> s = parse_schemes(bias_scheme);
            if (s.size() != 1) throw std::invalid_argument("bias-curve: pick one scheme");
            bias_cfg.scheme = s.front();
            run_bias_curve(bias_cfg);
            return 0;
        }
        if (validate->parsed()) {
            if (level == "fast") {
                val_cfg.level = ValidationLevel::Fast;
            } else if (level == "full") {
                val_cfg.level = ValidationLevel::Full;
            } else {
                throw std::invalid_argument("validate: level must be fast or full");
            }
            return run_validate(val_cfg);
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}

}  // namespace elfkit
