#include "elfkit/run_commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "elfkit/bayes_engine.hpp"
#include "elfkit/elf_optimizer.hpp"
#include "elfkit/series_expansion.hpp"

namespace elfkit {

namespace {

constexpr double kPi = std::numbers::pi;

// Shortest round-trip decimal form; locale-independent by construction, so
// identical inputs always produce byte-identical files.
std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::ofstream open_output(const std::string& path) {
    if (path.empty()) throw std::invalid_argument("missing output path");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

struct CurveRow {
    std::string scheme;
    std::string variant;
    int L;
    double sigma;
    double mu;
    double V;
    double epv;
    std::string x_star;
};

}  // namespace

void run_vrf_curve(const VrfCurveConfig& config) {
    if (config.schemes.empty()) throw std::invalid_argument("vrf-curve: no scheme selected");
    if (config.L < 1) throw std::invalid_argument("vrf-curve: L must be >= 1");
    if (config.sigmas.empty()) throw std::invalid_argument("vrf-curve: sigma list is empty");
    for (double s : config.sigmas) {
        if (!(s > 0.0)) throw std::invalid_argument("vrf-curve: sigma must be positive");
    }
    if (config.mu_points < 1) throw std::invalid_argument("vrf-curve: mu-points must be >= 1");
    if (config.restarts < 0) throw std::invalid_argument("vrf-curve: restarts must be >= 0");
    if (!(config.fidelity >= 0.0 && config.fidelity <= 1.0)) {
        throw std::invalid_argument("vrf-curve: fidelity must lie in [0, 1]");
    }

    std::vector<CurveRow> rows;
    rows.reserve(2 * config.schemes.size() * config.sigmas.size() *
                 static_cast<std::size_t>(config.mu_points));

    for (std::size_t si = 0; si < config.schemes.size(); ++si) {
        const Scheme scheme = config.schemes[si];
        const ClfSpec spec = ClfSpec::make(scheme, config.L);
        CosinePoly clf_poly(std::vector<double>(static_cast<std::size_t>(spec.q) + 1, 0.0));
        clf_poly.coeffs.back() = spec.r % 2 == 0 ? 1.0 : -1.0;

        for (std::size_t gi = 0; gi < config.sigmas.size(); ++gi) {
            const double sigma = config.sigmas[gi];
            for (int mi = 1; mi <= config.mu_points; ++mi) {
                const double mu = mi * kPi / (config.mu_points + 1);
                const GaussianPrior prior(mu, sigma);

                const VrfReport clf = vrf_report(clf_poly, prior, config.fidelity);
                rows.push_back({scheme_name(scheme), "CLF", config.L, sigma, mu, clf.V,
                                clf.epv, ""});

                OptProblem problem{scheme, config.L, prior, config.restarts, 60,
                                   mix_seed(config.seed, (si * config.sigmas.size() + gi) *
                                                             (config.mu_points + 1) +
                                                         static_cast<std::uint64_t>(mi)),
                                   config.fidelity};
                const OptResult result = optimize(problem);
                std::string xs;
                for (std::size_t i = 0; i < result.x_star.angles.size(); ++i) {
                    if (i) xs += ';';
                    xs += fmt(result.x_star.angles[i]);
                }
                const double s2 = sigma * sigma;
                rows.push_back({scheme_name(scheme), "ELF", config.L, sigma, mu,
                                result.V_star, s2 * (1.0 - s2 * result.V_star), std::move(xs)});
            }
        }
    }

    std::sort(rows.begin(), rows.end(), [](const CurveRow& a, const CurveRow& b) {
        return std::tie(a.scheme, a.variant, a.sigma, a.mu) <
               std::tie(b.scheme, b.variant, b.sigma, b.mu);
    });

    std::ofstream out = open_output(config.out_path);
    out << "scheme,variant,L,sigma,mu,V,epv,x_star\n";
    for (const CurveRow& r : rows) {
        out << r.scheme << ',' << r.variant << ',' << r.L << ',' << fmt(r.sigma) << ','
            << fmt(r.mu) << ',' << fmt(r.V) << ',' << fmt(r.epv) << ',' << r.x_star << '\n';
    }
    if (!out.good()) throw std::runtime_error("write failure: " + config.out_path);
}

void run_bias_curve(const BiasCurveConfig& config) {
    if (config.L < 1) throw std::invalid_argument("bias-curve: L must be >= 1");
    if (config.theta_points < 2) throw std::invalid_argument("bias-curve: need >= 2 theta points");
    if (!(config.fidelity >= 0.0 && config.fidelity <= 1.0)) {
        throw std::invalid_argument("bias-curve: fidelity must lie in [0, 1]");
    }
    TunableParams x = config.x.empty()
                          ? clf_params(config.scheme, config.L)
                          : TunableParams(config.x, config.scheme);
    if (x.L() != config.L) {
        throw std::invalid_argument("bias-curve: angle list length does not match L");
    }

    const CosinePoly poly = fourier_coefficients(x);
    std::ofstream out = open_output(config.out_path);
    out << "theta,lambda_direct,lambda_series,abs_diff\n";
    double worst = 0.0;
    for (int i = 0; i < config.theta_points; ++i) {
        const double theta = i * kPi / (config.theta_points - 1);
        const double direct = config.fidelity * bias_direct(config.scheme, theta, x);
        const double series = config.fidelity * poly.eval(theta);
        const double diff = std::abs(direct - series);
        worst = std::max(worst, diff);
        out << fmt(theta) << ',' << fmt(direct) << ',' << fmt(series) << ',' << fmt(diff)
            << '\n';
    }
    out << "summary,,," << fmt(worst) << '\n';
    if (!out.good()) throw std::runtime_error("write failure: " + config.out_path);
}

int run_validate(const ValidateConfig& config) {
    const std::vector<CheckResult> checks = run_validation_checks(config.level);
    bool all_passed = true;
    for (const CheckResult& c : checks) {
        all_passed = all_passed && c.passed;
        std::printf("[%s] %s%s%s\n", c.passed ? " ok " : "FAIL", c.name.c_str(),
                    c.detail.empty() ? "" : ": ", c.detail.c_str());
    }
    std::printf("%zu checks, %s\n", checks.size(), all_passed ? "all passed" : "FAILURES");

    if (!config.json_path.empty()) {
        nlohmann::json report;
        report["level"] = config.level == ValidationLevel::Full ? "full" : "fast";
        report["passed"] = all_passed;
        report["checks"] = nlohmann::json::array();
        for (const CheckResult& c : checks) {
            report["checks"].push_back(
                {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        }
        std::ofstream out = open_output(config.json_path);
        out << report.dump(2) << '\n';
        if (!out.good()) throw std::runtime_error("write failure: " + config.json_path);
    }
    return all_passed ? 0 : 1;
}

}  // namespace elfkit
