#include <doctest.h>

#include "elfkit/series_expansion.hpp"
#include "test_util.hpp"

using namespace elfkit;
using namespace elfkit_test;

namespace {

double max_gap_to_circuit(const CosinePoly& poly, Scheme scheme, const TunableParams& x) {
    double worst = 0.0;
    for (int g = 0; g < 257; ++g) {
        const double theta = g * kPi / 256.0;
        worst = std::max(worst, std::abs(poly.eval(theta) - bias_direct(scheme, theta, x)));
    }
    return worst;
}

}  // namespace

TEST_CASE("zeta products") {
    std::mt19937_64 rng(301);
    std::vector<double> x(5);
    for (double& v : x) v = random_angle(rng);

    double all_cos = 1.0;
    for (double v : x) all_cos *= std::cos(v);
    CHECK(zeta(BitString{0, 0, 0, 0, 0}, x) == doctest::Approx(all_cos).epsilon(1e-15));

    const double want = std::cos(x[0]) * std::cos(x[1]) * std::sin(x[2]) * std::cos(x[3]) *
                        std::sin(x[4]);
    CHECK(zeta(BitString{0, 0, 1, 0, 1}, x) == doctest::Approx(want).epsilon(1e-15));

    CHECK(zeta(BitString{1, 1}, std::vector<double>{kPi / 2, kPi / 2}) ==
          doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(zeta(BitString{1, 0}, std::vector<double>{0.1}), std::invalid_argument);

    // Multiplicative over concatenation.
    const BitString y1{1, 0}, y2{0, 1, 1};
    std::vector<double> x1{0.2, 0.5}, x2{1.0, -0.3, 0.8};
    BitString y(y1);
    y.insert(y.end(), y2.begin(), y2.end());
    std::vector<double> xx(x1);
    xx.insert(xx.end(), x2.begin(), x2.end());
    CHECK(zeta(y, xx) == doctest::Approx(zeta(y1, x1) * zeta(y2, x2)).epsilon(1e-15));
}

TEST_CASE("nu is the real part of i^s") {
    CHECK(nu(0) == 1);
    CHECK(nu(6) == -1);
    CHECK(nu(-3) == 0);
    for (long long s = -10; s <= 10; ++s) {
        const long long r = ((s % 4) + 4) % 4;
        CHECK(nu(s) == (r == 0 ? 1 : (r == 2 ? -1 : 0)));
    }
}

TEST_CASE("two-argument arctangent") {
    CHECK(arg2(1, 0) == doctest::Approx(kPi / 2));
    CHECK(arg2(0, -1) == doctest::Approx(kPi));
    CHECK(arg2(1, 1) == doctest::Approx(kPi / 4));
    CHECK(arg2(-1, 0) == doctest::Approx(-kPi / 2));
    CHECK_THROWS_AS(arg2(0.0, 0.0), std::domain_error);
}

TEST_CASE("cosine polynomial evaluation and derivatives") {
    const CosinePoly poly(std::vector<double>{0.2, -0.5, 0.0, 0.3});
    const double theta = 0.71;
    CHECK(poly.eval(theta) ==
          doctest::Approx(0.2 - 0.5 * std::cos(theta) + 0.3 * std::cos(3 * theta)).epsilon(1e-15));

    // Analytic derivatives against central differences.
    const double h = 1e-5;
    const double fd1 = (poly.eval(theta + h) - poly.eval(theta - h)) / (2 * h);
    CHECK(poly.derivative(theta, 1) == doctest::Approx(fd1).epsilon(1e-8));
    const double fd2 = (poly.eval(theta + h) - 2 * poly.eval(theta) + poly.eval(theta - h)) /
                       (h * h);
    CHECK(poly.derivative(theta, 2) == doctest::Approx(fd2).epsilon(1e-5));
    CHECK(poly.derivative(theta, 0) == doctest::Approx(poly.eval(theta)).epsilon(1e-15));

    CHECK(poly.scaled(0.5).eval(theta) == doctest::Approx(0.5 * poly.eval(theta)).epsilon(1e-15));
}

TEST_CASE("AB coefficients") {
    SUBCASE("all-pi/2 angles give a single harmonic") {
        for (int L = 1; L <= 4; ++L) {
            const CosinePoly poly = fourier_ab(clf_params(Scheme::AB, L));
            for (int l = 0; l <= L; ++l) {
                const double want = (l == L) ? (L % 2 == 0 ? 1.0 : -1.0) : 0.0;
                CHECK(std::abs(poly.coeffs[static_cast<std::size_t>(l)] - want) < 1e-12);
            }
        }
    }

    SUBCASE("L = 1 closed form") {
        std::mt19937_64 rng(302);
        for (int rep = 0; rep < 50; ++rep) {
            const double x1 = random_angle(rng), x2 = random_angle(rng);
            const CosinePoly poly = fourier_ab(TunableParams({x1, x2}, Scheme::AB));
            CHECK(poly.coeffs[0] == doctest::Approx(std::cos(x1) * std::cos(x2)).epsilon(1e-13));
            CHECK(poly.coeffs[1] == doctest::Approx(-std::sin(x1) * std::sin(x2)).epsilon(1e-13));
        }
    }

    SUBCASE("matches the circuit oracle") {
        std::mt19937_64 rng(303);
        for (int L = 1; L <= 4; ++L) {
            for (int rep = 0; rep < 10; ++rep) {
                const TunableParams x = random_params(rng, Scheme::AB, L);
                CHECK(max_gap_to_circuit(fourier_ab(x), Scheme::AB, x) < 1e-10);
            }
        }
    }

    SUBCASE("capacity guard") {
        CHECK_THROWS_AS(fourier_ab(TunableParams(std::vector<double>(26, 0.1), Scheme::AB)),
                        std::length_error);
        CHECK_THROWS_AS(fourier_ab(clf_params(Scheme::AF, 1)), std::invalid_argument);
    }
}

TEST_CASE("AF coefficients") {
    SUBCASE("all-pi/2 angles give a single harmonic") {
        for (int L = 1; L <= 3; ++L) {
            const CosinePoly poly = fourier_af(clf_params(Scheme::AF, L));
            for (int l = 0; l <= 2 * L + 1; ++l) {
                const double want = (l == 2 * L + 1) ? 1.0 : 0.0;
                CHECK(std::abs(poly.coeffs[static_cast<std::size_t>(l)] - want) < 1e-12);
            }
        }
    }

    SUBCASE("L = 1 closed form") {
        std::mt19937_64 rng(304);
        for (int rep = 0; rep < 50; ++rep) {
            const double x1 = random_angle(rng), x2 = random_angle(rng);
            const CosinePoly poly = fourier_af(TunableParams({x1, x2}, Scheme::AF));
            const double c1 = std::cos(x1), s1 = std::sin(x1);
            const double c2 = std::cos(x2), s2 = std::sin(x2);
            CHECK(poly.coeffs[0] == doctest::Approx(2 * c1 * s1 * c2 * s2).epsilon(1e-13));
            CHECK(poly.coeffs[1] ==
                  doctest::Approx(c1 * c1 * c2 * c2 + c1 * c1 * s2 * s2 + s1 * s1 * c2 * c2)
                      .epsilon(1e-13));
            CHECK(poly.coeffs[2] == doctest::Approx(-2 * c1 * c2 * s1 * s2).epsilon(1e-13));
            CHECK(poly.coeffs[3] == doctest::Approx(s1 * s1 * s2 * s2).epsilon(1e-13));
        }
    }

    SUBCASE("matches the circuit oracle") {
        std::mt19937_64 rng(305);
        for (int L = 1; L <= 3; ++L) {
            for (int rep = 0; rep < 10; ++rep) {
                const TunableParams x = random_params(rng, Scheme::AF, L);
                CHECK(max_gap_to_circuit(fourier_af(x), Scheme::AF, x) < 1e-10);
            }
        }
    }

    SUBCASE("capacity guard") {
        CHECK_THROWS_AS(fourier_af(TunableParams(std::vector<double>(12, 0.1), Scheme::AF)),
                        std::length_error);
    }
}

TEST_CASE("leading coefficients are sine products") {
    std::mt19937_64 rng(306);
    for (Scheme scheme : {Scheme::AF, Scheme::AB}) {
        for (int L = 1; L <= 4; ++L) {
            if (scheme == Scheme::AF && L > 3) continue;
            const TunableParams x = random_params(rng, scheme, L);
            const CosinePoly poly = fourier_coefficients(x, CoeffEngine::Combinatorial);
            double want = scheme == Scheme::AB && L % 2 == 1 ? -1.0 : 1.0;
            for (double a : x.angles) {
                want *= scheme == Scheme::AF ? std::sin(a) * std::sin(a) : std::sin(a);
            }
            CHECK(poly.coeffs.back() == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("numeric recovery agrees with the combinatorial sums") {
    std::mt19937_64 rng(307);
    for (Scheme scheme : {Scheme::AF, Scheme::AB}) {
        for (int L = 1; L <= 4; ++L) {
            if (scheme == Scheme::AF && L > 4) continue;
            for (int rep = 0; rep < 13; ++rep) {
                const TunableParams x = random_params(rng, scheme, L);
                const CosinePoly numeric = fourier_numeric(scheme, x);
                const CosinePoly comb = x.scheme == Scheme::AB ? fourier_ab(x) : fourier_af(x);
                REQUIRE(numeric.coeffs.size() == comb.coeffs.size());
                for (std::size_t l = 0; l < comb.coeffs.size(); ++l) {
                    CHECK(std::abs(numeric.coeffs[l] - comb.coeffs[l]) < 1e-9);
                }
            }
        }
    }

    // Zero angles: the AF circuit reduces to a bare reflection measurement,
    // whose bias is cos(theta).
    const TunableParams zeros(std::vector<double>{0, 0}, Scheme::AF);
    const CosinePoly poly = fourier_numeric(Scheme::AF, zeros);
    CHECK(std::abs(poly.coeffs[1] - 1.0) < 1e-12);
    for (std::size_t l = 0; l < poly.coeffs.size(); ++l) {
        if (l != 1) CHECK(std::abs(poly.coeffs[l]) < 1e-12);
    }
    CHECK(bias_direct(Scheme::AF, 0.63, zeros) == doctest::Approx(std::cos(0.63)).epsilon(1e-13));
}

TEST_CASE("per-coordinate decomposition of the AB coefficients") {
    SUBCASE("L = 1, first coordinate") {
        std::mt19937_64 rng(308);
        const double x2 = random_angle(rng);
        const TunableParams x({0.4, x2}, Scheme::AB);
        const CsdPair pair = csd_ab(x, 0);
        CHECK(pair.c.coeffs[0] == doctest::Approx(std::cos(x2)).epsilon(1e-13));
        CHECK(std::abs(pair.c.coeffs[1]) < 1e-13);
        CHECK(std::abs(pair.s.coeffs[0]) < 1e-13);
        CHECK(pair.s.coeffs[1] == doctest::Approx(-std::sin(x2)).epsilon(1e-13));
    }

    SUBCASE("setting the coordinate to zero leaves only the cosine part") {
        std::mt19937_64 rng(309);
        TunableParams x = random_params(rng, Scheme::AB, 2);
        x.angles[1] = 0.0;
        const CsdPair pair = csd_ab(x, 1);
        const CosinePoly full = fourier_ab(x);
        for (std::size_t l = 0; l < full.coeffs.size(); ++l) {
            CHECK(full.coeffs[l] == doctest::Approx(pair.c.coeffs[l]).epsilon(1e-13));
        }
    }

    SUBCASE("identity at random evaluation points") {
        std::mt19937_64 rng(310);
        for (int rep = 0; rep < 10; ++rep) {
            const TunableParams x = random_params(rng, Scheme::AB, 3);
            const std::size_t j = rng() % x.angles.size();
            const CsdPair pair = csd_ab(x, j);
            const CosinePoly full = fourier_ab(x);
            for (int g = 0; g < 100; ++g) {
                const double theta = uniform(rng, 0.0, kPi);
                const double rebuilt = pair.c.eval(theta) * std::cos(x.angles[j]) +
                                       pair.s.eval(theta) * std::sin(x.angles[j]);
                CHECK(std::abs(rebuilt - full.eval(theta)) < 1e-12);
            }
        }
    }

    CHECK_THROWS_AS(csd_ab(clf_params(Scheme::AB, 1), 2), std::out_of_range);
    CHECK_THROWS_AS(csd_ab(clf_params(Scheme::AF, 1), 0), std::invalid_argument);
}

TEST_CASE("per-coordinate decomposition of the AF coefficients") {
    std::mt19937_64 rng(311);

    SUBCASE("coordinate pinned to 0 or pi/4") {
        TunableParams x = random_params(rng, Scheme::AF, 2);
        const std::size_t j = 2;
        const CsbdTriple triple = csbd_af(x, j);

        x.angles[j] = 0.0;
        const CosinePoly at0 = fourier_af(x);
        for (std::size_t l = 0; l < at0.coeffs.size(); ++l) {
            CHECK(at0.coeffs[l] ==
                  doctest::Approx(triple.c.coeffs[l] + triple.b.coeffs[l]).epsilon(1e-12));
        }

        x.angles[j] = kPi / 4;
        const CosinePoly at45 = fourier_af(x);
        for (std::size_t l = 0; l < at45.coeffs.size(); ++l) {
            CHECK(at45.coeffs[l] ==
                  doctest::Approx(triple.s.coeffs[l] + triple.b.coeffs[l]).epsilon(1e-12));
        }
    }

    SUBCASE("identity at random points") {
        for (int L = 1; L <= 3; ++L) {
            for (int rep = 0; rep < 5; ++rep) {
                const TunableParams x = random_params(rng, Scheme::AF, L);
                const std::size_t j = rng() % x.angles.size();
                const CsbdTriple triple = csbd_af(x, j);
                const CosinePoly full = fourier_af(x);
                const double c2 = std::cos(2 * x.angles[j]);
                const double s2 = std::sin(2 * x.angles[j]);
                for (int g = 0; g < 67; ++g) {
                    const double theta = uniform(rng, 0.0, kPi);
                    const double rebuilt = triple.c.eval(theta) * c2 +
                                           triple.s.eval(theta) * s2 + triple.b.eval(theta);
                    CHECK(std::abs(rebuilt - full.eval(theta)) < 1e-10);
                }
            }
        }
    }

    CHECK_THROWS_AS(csbd_af(clf_params(Scheme::AF, 1), 5), std::out_of_range);
}

TEST_CASE("products of biases stay cosine polynomials of summed degree") {
    std::mt19937_64 rng(312);
    for (int L = 1; L <= 3; ++L) {
        const CosinePoly a = fourier_ab(random_params(rng, Scheme::AB, L));
        const CosinePoly b = fourier_ab(random_params(rng, Scheme::AB, L));
        const int q = 2 * L;
        std::vector<double> mu(static_cast<std::size_t>(q) + 1, 0.0);
        for (int l = 0; l <= q; ++l) {
            double acc = 0.0;
            for (int j = 0; j <= q; ++j) {
                const double theta = (2.0 * j + 1.0) * kPi / (2.0 * (q + 1));
                acc += a.eval(theta) * b.eval(theta) * std::cos(l * theta);
            }
            mu[static_cast<std::size_t>(l)] = (l == 0 ? 1.0 : 2.0) * acc / (q + 1);
        }
        const CosinePoly prod(std::move(mu));
        for (int g = 0; g <= 128; ++g) {
            const double theta = g * kPi / 128.0;
            CHECK(std::abs(prod.eval(theta) - a.eval(theta) * b.eval(theta)) < 1e-11);
        }
    }
}
