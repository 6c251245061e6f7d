#include <doctest.h>

#include "elfkit/bayes_engine.hpp"
#include "elfkit/chebyshev_reference.hpp"
#include "elfkit/series_expansion.hpp"
#include "test_util.hpp"

using namespace elfkit;
using namespace elfkit_test;

TEST_CASE("spec carries the derived constants") {
    const ClfSpec af = ClfSpec::make(Scheme::AF, 2);
    CHECK(af.q == 5);
    CHECK(af.r == 0);
    const ClfSpec ab = ClfSpec::make(Scheme::AB, 3);
    CHECK(ab.q == 3);
    CHECK(ab.r == 3);
    CHECK_THROWS_AS(ClfSpec::make(Scheme::AF, 0), std::invalid_argument);
}

TEST_CASE("all-pi/2 bias") {
    CHECK(clf_bias(ClfSpec::make(Scheme::AF, 2), 0.0) == doctest::Approx(1.0));
    CHECK(clf_bias(ClfSpec::make(Scheme::AB, 1), kPi / 3) == doctest::Approx(-0.5).epsilon(1e-14));

    // Equals the direct circuit at the all-pi/2 angles.
    for (Scheme scheme : {Scheme::AF, Scheme::AB}) {
        for (int L = 1; L <= 3; ++L) {
            const ClfSpec spec = ClfSpec::make(scheme, L);
            const TunableParams x = clf_params(scheme, L);
            for (int g = 0; g <= 64; ++g) {
                const double theta = g * kPi / 64.0;
                CHECK(std::abs(clf_bias(spec, theta) - bias_direct(scheme, theta, x)) < 1e-12);
            }
        }
    }

    // Degree-3 first-kind polynomial in cos(theta) for the smallest AF case.
    const ClfSpec spec = ClfSpec::make(Scheme::AF, 1);
    for (int g = 0; g <= 32; ++g) {
        const double theta = g * kPi / 32.0;
        const double c = std::cos(theta);
        CHECK(clf_bias(spec, theta) == doctest::Approx(4 * c * c * c - 3 * c).epsilon(1e-12));
    }
}

TEST_CASE("all-pi/2 variance reduction factor") {
    const ClfSpec spec = ClfSpec::make(Scheme::AF, 1);  // q = 3

    CHECK(clf_vrf(spec, kPi / 6, 0.1) == doctest::Approx(8.2253806674410537).epsilon(1e-14));
    CHECK(clf_vrf(spec, kPi / 6, 0.1) ==
          doctest::Approx(9.0 * std::exp(-0.09)).epsilon(1e-14));
    CHECK(std::abs(clf_vrf(spec, kPi / 3, 0.25)) < 1e-25);

    for (double sigma : {0.5, 0.2, 0.05}) {
        CHECK(clf_vrf(spec, kPi / 6, sigma) ==
              doctest::Approx(9.0 * std::exp(-9.0 * sigma * sigma)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(clf_vrf(spec, 0.3, 0.0), std::invalid_argument);
}

TEST_CASE("closed form equals the generic pipeline at the all-pi/2 point") {
    for (Scheme scheme : {Scheme::AF, Scheme::AB}) {
        for (int L = 1; L <= 3; ++L) {
            const ClfSpec spec = ClfSpec::make(scheme, L);
            const CosinePoly poly = fourier_coefficients(clf_params(scheme, L));
            for (double sigma : {0.4, 0.15, 0.05}) {
                for (int i = 1; i <= 19; ++i) {
                    const double mu = i * kPi / 20.0;
                    const VrfReport rep = vrf_report(poly, GaussianPrior(mu, sigma));
                    CHECK(std::abs(rep.V - clf_vrf(spec, mu, sigma)) < 1e-10);
                }
            }
        }
    }
}

TEST_CASE("property report") {
    std::vector<double> grid(1000);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid[i] = (static_cast<double>(i) + 0.5) * kPi / static_cast<double>(grid.size());
    }

    const ClfSpec spec = ClfSpec::make(Scheme::AF, 1);
    const ClfPropertyReport rep = clf_properties_check(spec, 0.2, grid);
    CHECK(rep.passed);
    CHECK(rep.failures.empty());
    CHECK(rep.max_observed <= 9.0 * std::exp(-9.0 * 0.04) + 1e-12);

    // Bound saturation: sigma = 1/q makes the peak hit 1/(e sigma^2).
    const double sigma = 1.0 / spec.q;
    CHECK(clf_vrf(spec, kPi / (2.0 * spec.q), sigma) ==
          doctest::Approx(1.0 / (std::numbers::e * sigma * sigma)).epsilon(1e-13));
    CHECK(clf_properties_check(spec, sigma, grid).passed);

    CHECK_THROWS_AS(clf_properties_check(spec, 0.2, std::span<const double>{}),
                    std::invalid_argument);
}

TEST_CASE("dead-spot derivatives of the all-pi/2 bias") {
    for (Scheme scheme : {Scheme::AF, Scheme::AB}) {
        for (int L = 1; L <= 2; ++L) {
            const ClfSpec spec = ClfSpec::make(scheme, L);
            CosinePoly poly(std::vector<double>(static_cast<std::size_t>(spec.q) + 1, 0.0));
            poly.coeffs.back() = spec.r % 2 == 0 ? 1.0 : -1.0;
            for (int k = 0; k <= 2; ++k) {
                const double mu = k * kPi / spec.q;
                CHECK(std::abs(poly.derivative(mu, 1)) < 1e-11);
                CHECK(std::abs(std::abs(poly.derivative(mu, 2)) - spec.q * spec.q) < 1e-9);
                CHECK(std::abs(std::abs(poly.eval(mu)) - 1.0) < 1e-12);
            }
        }
    }
}
