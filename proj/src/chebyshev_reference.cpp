#include "elfkit/chebyshev_reference.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace elfkit {

namespace {
constexpr double kPi = std::numbers::pi;
}

ClfSpec ClfSpec::make(Scheme scheme, int L) {
    if (L < 1) throw std::invalid_argument("ClfSpec: L must be >= 1");
    return {scheme, L, scheme_degree(scheme, L), scheme_r(scheme, L)};
}

double clf_bias(const ClfSpec& spec, double theta) {
    const double sign = spec.r % 2 == 0 ? 1.0 : -1.0;
    return sign * std::cos(spec.q * theta);
}

double clf_vrf(const ClfSpec& spec, double mu, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("clf_vrf: sigma must be positive");
    const double q = spec.q;
    const double s = std::sin(q * mu);
    const double c = std::cos(q * mu);
    return q * q * s * s / (std::exp(q * q * sigma * sigma) - c * c);
}

ClfPropertyReport clf_properties_check(const ClfSpec& spec, double sigma,
                                       std::span<const double> mu_grid) {
    if (mu_grid.empty()) throw std::invalid_argument("clf_properties_check: empty grid");
    ClfPropertyReport report;
    const auto fail = [&report](std::string msg) {
        report.passed = false;
        report.failures.push_back(std::move(msg));
    };

    const double q = spec.q;
    const double period = kPi / q;
    const double peak = q * q * std::exp(-q * q * sigma * sigma);

    for (double mu : mu_grid) {
        const double v = clf_vrf(spec, mu, sigma);
        report.max_observed = std::max(report.max_observed, v);

        if (std::abs(clf_vrf(spec, mu + period, sigma) - v) > 1e-12) {
            fail("periodicity pi/q violated at mu = " + std::to_string(mu));
        }
        if (v < 0.0) fail("negative value at mu = " + std::to_string(mu));
        if (v > peak + 1e-12) fail("peak bound exceeded at mu = " + std::to_string(mu));

        // Zero set: exactly the multiples of pi/q.
        const double frac = mu / period - std::round(mu / period);
        const bool on_zero = std::abs(frac) < 1e-9;
        if (on_zero && v > 1e-12) fail("nonzero value on a dead spot at mu = " + std::to_string(mu));
        if (!on_zero && v == 0.0) fail("unexpected zero at mu = " + std::to_string(mu));
    }

    if (std::abs(clf_vrf(spec, kPi / (2.0 * q), sigma) - peak) > 1e-12) {
        fail("peak value not attained at mu = pi/(2q)");
    }
    const double global_bound = 1.0 / (std::numbers::e * sigma * sigma);
    if (peak > global_bound * (1.0 + 1e-12)) {
        fail("global bound 1/(e sigma^2) exceeded");
    }
    return report;
}

}  // namespace elfkit
