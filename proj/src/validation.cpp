#include "elfkit/validation.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "elfkit/bayes_engine.hpp"
#include "elfkit/chebyshev_reference.hpp"
#include "elfkit/elf_optimizer.hpp"
#include "elfkit/logical_circuit.hpp"
#include "elfkit/pq_combinatorics.hpp"
#include "elfkit/series_expansion.hpp"

namespace elfkit {

namespace {

constexpr double kPi = std::numbers::pi;

// Collects the first failure per check; later failures are counted only.
struct Collector {
    bool passed = true;
    int failures = 0;
    std::string first;

    void expect(bool ok, const std::function<std::string()>& describe) {
        if (ok) return;
        if (passed) first = describe();
        passed = false;
        ++failures;
    }

    CheckResult finish(std::string name) const {
        std::string detail = first;
        if (!passed && failures > 1) {
            detail += " (+" + std::to_string(failures - 1) + " more)";
        }
        return {std::move(name), passed, std::move(detail)};
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

TunableParams random_params(std::mt19937_64& rng, Scheme scheme, int L) {
    std::vector<double> a(static_cast<std::size_t>(2 * L));
    for (double& v : a) v = uniform(rng, -kPi, kPi);
    return TunableParams(std::move(a), scheme);
}

BitString random_bits(std::mt19937_64& rng, int n) {
    BitString x(static_cast<std::size_t>(n));
    for (auto& b : x) b = static_cast<std::uint8_t>(rng() & 1u);
    return x;
}

// Reference reducer: delete a randomly chosen cancelling pair until none is
// left. Confluence says the result must match the single-pass stack.
ReducedWord reduce_reference(const BitString& x, std::mt19937_64& rng) {
    std::vector<std::uint8_t> letters;  // rightmost first, 0 = q, 1 = p
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i]) letters.push_back(static_cast<std::uint8_t>(i % 2 == 0 ? 0 : 1));
    }
    while (true) {
        std::vector<std::size_t> cancellable;
        for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
            if (letters[i] == letters[i + 1]) cancellable.push_back(i);
        }
        if (cancellable.empty()) break;
        const std::size_t pick = cancellable[rng() % cancellable.size()];
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(pick),
                      letters.begin() + static_cast<std::ptrdiff_t>(pick) + 2);
    }
    if (letters.empty()) return {0, 0, 0};
    const int u = letters.back() == 1;
    const int v = letters.front() == 0;
    return {u, (static_cast<int>(letters.size()) - u - v) / 2, v};
}

CheckResult check_circuit_unitarity() {
    Collector c;
    std::mt19937_64 rng(11);
    for (int len : {1, 2, 3, 5, 9, 17, 41}) {
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<double> z(static_cast<std::size_t>(len));
            for (double& v : z) v = uniform(rng, -kPi, kPi);
            const double theta = uniform(rng, 0.0, kPi);
            const double defect = q_product(theta, z).unitarity_defect();
            c.expect(defect < 1e-12, [&] {
                return "unitarity defect " + fmt(defect) + " at length " + std::to_string(len);
            });
        }
    }
    return c.finish("circuit_unitarity");
}

CheckResult check_bias_symmetry(int max_L) {
    Collector c;
    std::mt19937_64 rng(12);
    for (Scheme scheme : {Scheme::AF, Scheme::AB}) {
        for (int L = 1; L <= max_L; ++L) {
            for (int rep = 0; rep < 20; ++rep) {
                TunableParams x = random_params(rng, scheme, L);
                const double theta = uniform(rng, -kPi, kPi);
                const double v = bias_direct(scheme, theta, x);
                c.expect(std::abs(bias_direct(scheme, -theta, x) - v) < 1e-12,
                         [&] { return "bias not even in theta"; });
                c.expect(std::abs(bias_direct(scheme, theta + 2 * kPi, x) - v) < 1e-12,
                         [&] { return "bias not 2pi-periodic in theta"; });
                TunableParams shifted = x;
                const std::size_t j = rng() % shifted.angles.size();
                shifted.angles[j] += 2 * kPi;
                c.expect(std::abs(bias_direct(scheme, theta, shifted) - v) < 1e-12,
                         [&] { return "bias not 2pi-periodic in a coordinate"; });
            }
        }
    }
    return c.finish("bias_symmetry_periodicity");
}

CheckResult check_bias_bound(int max_L) {
    Collector c;
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 10000; ++rep) {
        const Scheme scheme = (rng() & 1u) ? Scheme::AF : Scheme::AB;
        const int L = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_L));
        const TunableParams x = random_params(rng, scheme, L);
        const double theta = uniform(rng, -kPi, kPi);
        const double v = bias_direct(scheme, theta, x);
        c.expect(std::abs(v) <= 1.0, [&] { return "bias escaped [-1, 1]: " + fmt(v); });
    }
    return c.finish("bias_bound");
}

CheckResult check_af_bias_real(int max_L) {
    Collector c;
    std::mt19937_64 rng(14);
    for (int rep = 0; rep < 500; ++rep) {
        const int L = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_L));
        const TunableParams x = random_params(rng, Scheme::AF, L);
        std::vector<double> z(x.angles);
        z.push_back(kPi / 2);
        for (auto it = x.angles.rbegin(); it != x.angles.rend(); ++it) z.push_back(-*it);
        const cplx raw = cplx{0.0, 1.0} * q00(uniform(rng, 0.0, kPi), z);
        c.expect(std::abs(raw.imag()) < 1e-10,
                 [&] { return "imaginary part " + fmt(raw.imag()); });
    }
    return c.finish("af_bias_is_real");
}

CheckResult check_reduction_confluence(int max_n) {
    Collector c;
    std::mt19937_64 rng(15);
    for (int rep = 0; rep < 10000; ++rep) {
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
        const BitString x = random_bits(rng, n);
        const ReducedWord a = reduce_word(x);
        const ReducedWord b = reduce_reference(x, rng);
        c.expect(a == b, [&] { return "stack and reference reductions disagree at n = " +
                                      std::to_string(n); });
        int wt = 0;
        for (auto bit : x) wt += bit;
        c.expect((a.u + 2 * a.k + a.v) % 2 == wt % 2,
                 [&] { return "reduced length parity mismatch"; });
    }
    return c.finish("reduction_confluence_and_parity");
}

CheckResult check_cardinalities(int max_n) {
    Collector c;
    for (int n = 1; n <= max_n; ++n) {
        // Count every string's class and compare with the closed forms.
        std::vector<std::uint64_t> xi_counts(static_cast<std::size_t>(n + 2), 0);
        std::vector<std::vector<std::uint64_t>> theta_counts(
            2, std::vector<std::uint64_t>(static_cast<std::size_t>(2 * (n + 2)), 0));
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            const ReducedWord w = reduce_word_bits(bits, n);
            theta_counts[static_cast<std::size_t>(w.u)]
                        [static_cast<std::size_t>(2 * w.k + w.v)]++;
            xi_counts[static_cast<std::size_t>(w.k + w.v)]++;
        }
        for (int u = 0; u <= 1; ++u) {
            for (int k = 0; k <= n / 2 + 1; ++k) {
                for (int v = 0; v <= 1; ++v) {
                    const std::uint64_t actual =
                        theta_counts[static_cast<std::size_t>(u)]
                                    [static_cast<std::size_t>(2 * k + v)];
                    const std::uint64_t expected =
                        theta_cardinality(n, u, k, v);
                    c.expect(actual == expected, [&] {
                        return "theta cardinality mismatch at (n,u,k,v) = (" +
                               std::to_string(n) + "," + std::to_string(u) + "," +
                               std::to_string(k) + "," + std::to_string(v) + ")";
                    });
                    const int limit = n % 2 == 0 ? n / 2 - 1 : (n - 1) / 2 - u;
                    c.expect((expected > 0) == (k <= limit), [&] {
                        return "emptiness threshold mismatch at n = " + std::to_string(n);
                    });
                }
            }
        }
        for (int l = 0; l <= (n + 1) / 2 + 1; ++l) {
            c.expect(xi_counts[static_cast<std::size_t>(l)] == xi_cardinality(n, l), [&] {
                return "xi cardinality mismatch at (alpha,l) = (" + std::to_string(n) + "," +
                       std::to_string(l) + ")";
            });
        }
    }
    for (int alpha = 1; alpha <= 16; ++alpha) {
        std::uint64_t total = 0;
        for (int l = 0; l <= (alpha + 1) / 2; ++l) total += xi_cardinality(alpha, l);
        c.expect(total == (std::uint64_t{1} << alpha),
                 [&] { return "partition sum != 2^alpha at alpha = " + std::to_string(alpha); });
    }
    return c.finish("cardinality_formulas");
}

CheckResult check_reversal_closure(int max_L) {
    Collector c;
    for (int L = 1; L <= max_L; ++L) {
        const int n = 2 * L;
        for (std::uint64_t am = 0; am < (std::uint64_t{1} << n); ++am) {
            for (std::uint64_t cm = 0; cm < (std::uint64_t{1} << n); ++cm) {
                BitString a(static_cast<std::size_t>(n)), cc(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) {
                    a[static_cast<std::size_t>(i)] = (am >> i) & 1u;
                    cc[static_cast<std::size_t>(i)] = (cm >> i) & 1u;
                }
                c.expect(reversal_closure_check(a, cc),
                         [&] { return "reversal closure violated at L = " + std::to_string(L); });
            }
        }
    }
    return c.finish("reversal_closure");
}

CheckResult check_series_vs_circuit(int max_af, int max_ab) {
    Collector c;
    std::mt19937_64 rng(16);
    for (Scheme scheme : {Scheme::AF, Scheme::AB}) {
        const int max_L = scheme == Scheme::AF ? max_af : max_ab;
        for (int L = 1; L <= max_L; ++L) {
            for (int rep = 0; rep < 10; ++rep) {
                const TunableParams x = random_params(rng, scheme, L);
                for (CoeffEngine engine : {CoeffEngine::Combinatorial, CoeffEngine::Numeric}) {
                    const CosinePoly poly = fourier_coefficients(x, engine);
                    double worst = 0.0;
                    for (int g = 0; g < 257; ++g) {
                        const double theta = g * kPi / 256.0;
                        worst = std::max(worst, std::abs(poly.eval(theta) -
                                                         bias_direct(scheme, theta, x)));
                    }
                    c.expect(worst < 1e-10, [&] {
                        return std::string("series/circuit gap ") + fmt(worst) + " for " +
                               scheme_name(scheme) + " L = " + std::to_string(L);
                    });
                }
            }
        }
    }
    return c.finish("series_matches_circuit");
}

CheckResult check_clf_delta_coefficients(int max_af, int max_ab) {
    Collector c;
    for (Scheme scheme : {Scheme::AF, Scheme::AB}) {
        const int max_L = scheme == Scheme::AF ? max_af : max_ab;
        for (int L = 1; L <= max_L; ++L) {
            const CosinePoly poly =
                fourier_coefficients(clf_params(scheme, L), CoeffEngine::Combinatorial);
            const int q = scheme_degree(scheme, L);
            const double lead = scheme == Scheme::AF ? 1.0 : (L % 2 == 0 ? 1.0 : -1.0);
            for (int l = 0; l <= q; ++l) {
                const double want = l == q ? lead : 0.0;
                c.expect(std::abs(poly.coeffs[static_cast<std::size_t>(l)] - want) < 1e-12,
                         [&] { return std::string("delta coefficient failure for ") +
                                      scheme_name(scheme) + " L = " + std::to_string(L); });
            }
        }
    }
    return c.finish("all_pi_half_delta_coefficients");
}

CheckResult check_l1_closed_forms() {
    Collector c;
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 100; ++rep) {
        const double x1 = uniform(rng, -kPi, kPi);
        const double x2 = uniform(rng, -kPi, kPi);
        const CosinePoly af = fourier_af(TunableParams({x1, x2}, Scheme::AF));
        const double c1 = std::cos(x1), s1 = std::sin(x1);
        const double c2 = std::cos(x2), s2 = std::sin(x2);
        const double want_af[4] = {2 * c1 * s1 * c2 * s2,
                                   c1 * c1 * c2 * c2 + c1 * c1 * s2 * s2 + s1 * s1 * c2 * c2,
                                   -2 * c1 * c2 * s1 * s2, s1 * s1 * s2 * s2};
        for (int l = 0; l <= 3; ++l) {
            c.expect(std::abs(af.coeffs[static_cast<std::size_t>(l)] - want_af[l]) < 1e-12,
                     [&] { return "L=1 AF coefficient l=" + std::to_string(l); });
        }
        const CosinePoly ab = fourier_ab(TunableParams({x1, x2}, Scheme::AB));
        c.expect(std::abs(ab.coeffs[0] - c1 * c2) < 1e-12, [&] { return "L=1 AB mu_0"; });
        c.expect(std::abs(ab.coeffs[1] + s1 * s2) < 1e-12, [&] { return "L=1 AB mu_1"; });
    }
    return c.finish("l1_coefficient_closed_forms");
}

CheckResult check_leading_terms(int max_af, int max_ab) {
    Collector c;
    std::mt19937_64 rng(18);
    for (Scheme scheme : {Scheme::AF, Scheme::AB}) {
        const int max_L = scheme == Scheme::AF ? max_af : max_ab;
        for (int L = 1; L <= max_L; ++L) {
            for (int rep = 0; rep < 20; ++rep) {
                const TunableParams x = random_params(rng, scheme, L);
                const CosinePoly poly = fourier_coefficients(x, CoeffEngine::Combinatorial);
                double want = scheme == Scheme::AB && L % 2 == 1 ? -1.0 : 1.0;
                for (double a : x.angles) {
                    want *= scheme == Scheme::AF ? std::sin(a) * std::sin(a) : std::sin(a);
                }
                c.expect(std::abs(poly.coeffs.back() - want) < 1e-12,
                         [&] { return std::string("leading term for ") + scheme_name(scheme) +
                                      " L = " + std::to_string(L); });
            }
        }
    }
    return c.finish("leading_terms");
}

CheckResult check_csd_csbd(int max_L) {
    Collector c;
    std::mt19937_64 rng(19);
    for (int L = 1; L <= max_L; ++L) {
        for (int rep = 0; rep < 10; ++rep) {
            {
                const TunableParams x = random_params(rng, Scheme::AB, L);
                const std::size_t j = rng() % x.angles.size();
                const CsdPair pair = csd_ab(x, j);
                const CosinePoly full = fourier_ab(x);
                const double ct = std::cos(x.angles[j]), st = std::sin(x.angles[j]);
                for (std::size_t l = 0; l < full.coeffs.size(); ++l) {
                    const double rebuilt = pair.c.coeffs[l] * ct + pair.s.coeffs[l] * st;
                    c.expect(std::abs(rebuilt - full.coeffs[l]) < 1e-12,
                             [&] { return "cosine-sine decomposition identity (AB)"; });
                }
            }
            {
                const TunableParams x = random_params(rng, Scheme::AF, L);
                const std::size_t j = rng() % x.angles.size();
                const CsbdTriple triple = csbd_af(x, j);
                const CosinePoly full = fourier_af(x);
                const double c2t = std::cos(2 * x.angles[j]), s2t = std::sin(2 * x.angles[j]);
                for (std::size_t l = 0; l < full.coeffs.size(); ++l) {
                    const double rebuilt = triple.c.coeffs[l] * c2t +
                                           triple.s.coeffs[l] * s2t + triple.b.coeffs[l];
                    c.expect(std::abs(rebuilt - full.coeffs[l]) < 1e-12,
                             [&] { return "cosine-sine-bias decomposition identity (AF)"; });
                }
            }
        }
    }
    return c.finish("per_coordinate_decompositions");
}

CheckResult check_product_closure(int max_L) {
    Collector c;
    std::mt19937_64 rng(20);
    for (int L = 1; L <= max_L; ++L) {
        const TunableParams x = random_params(rng, Scheme::AB, L);
        const TunableParams y = random_params(rng, Scheme::AB, L);
        const CosinePoly px = fourier_ab(x);
        const CosinePoly py = fourier_ab(y);
        // The pointwise product must be a cosine polynomial of degree 2L:
        // recover it from samples and compare everywhere.
        const int q = 2 * L;
        std::vector<double> mu(static_cast<std::size_t>(q) + 1, 0.0);
        for (int l = 0; l <= q; ++l) {
            double acc = 0.0;
            for (int j = 0; j <= q; ++j) {
                const double theta = (2.0 * j + 1.0) * kPi / (2.0 * (q + 1));
                acc += px.eval(theta) * py.eval(theta) * std::cos(l * theta);
            }
            mu[static_cast<std::size_t>(l)] = (l == 0 ? 1.0 : 2.0) * acc / (q + 1);
        }
        const CosinePoly prod(std::move(mu));
        for (int g = 0; g <= 64; ++g) {
            const double theta = g * kPi / 64.0;
            c.expect(std::abs(prod.eval(theta) - px.eval(theta) * py.eval(theta)) < 1e-10,
                     [&] { return "product of two degree-L biases is not degree 2L"; });
        }
    }
    return c.finish("product_closure");
}

CheckResult check_quadrature_vs_closed_form(int max_L) {
    Collector c;
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 12; ++rep) {
        const Scheme scheme = (rng() & 1u) ? Scheme::AF : Scheme::AB;
        const int L = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_L));
        const TunableParams x = random_params(rng, scheme, L);
        const GaussianPrior prior(uniform(rng, 0.1, kPi - 0.1), uniform(rng, 0.01, 1.0));
        const CosinePoly poly = fourier_coefficients(x);
        const BcPair closed = b_chi_gaussian(poly, prior);
        const BcPair quad = b_chi_quadrature(
            [&](double t) { return bias_direct(scheme, t, x); }, prior);
        c.expect(std::abs(closed.b - quad.b) < 1e-8,
                 [&] { return "expected bias: quadrature vs closed form"; });
        c.expect(std::abs(closed.chi - quad.chi) < 1e-8,
                 [&] { return "chi function: quadrature vs closed form"; });

        const double h = 1e-6;
        const GaussianPrior up(prior.mu + h, prior.sigma);
        const GaussianPrior dn(prior.mu - h, prior.sigma);
        const double fd =
            (b_chi_gaussian(poly, up).b - b_chi_gaussian(poly, dn).b) / (2 * h);
        const double scale = std::max(1.0, std::abs(closed.chi));
        c.expect(std::abs(fd - closed.chi) < 1e-6 * scale,
                 [&] { return "chi is not the mu-derivative of b"; });
    }
    return c.finish("gaussian_closed_forms");
}

CheckResult check_epv() {
    Collector c;
    std::mt19937_64 rng(22);
    for (int rep = 0; rep < 8; ++rep) {
        const int L = 1 + static_cast<int>(rng() % 2);
        const Scheme scheme = (rng() & 1u) ? Scheme::AF : Scheme::AB;
        const TunableParams x = random_params(rng, scheme, L);
        const GaussianPrior g(uniform(rng, 0.3, kPi - 0.3), uniform(rng, 0.05, 0.5));
        const Prior prior = make_prior(g);
        const DiscreteLikelihood lik = DiscreteLikelihood::from_bias(
            [&](double t) { return bias_direct(scheme, t, x); });
        const double epv = epv_general(prior, lik);
        const double s2 = g.sigma * g.sigma;
        c.expect(epv >= 0.0 && epv <= s2 + 1e-10,
                 [&] { return "expected posterior variance escaped [0, sigma^2]"; });
        const double i0 = moment_Ik(prior, lik, 0, 0);
        const double i1 = moment_Ik(prior, lik, 1, 0);
        c.expect(std::abs(epv - epv_two_outcome(i0, i1, g.mu, g.sigma)) < 1e-10,
                 [&] { return "general and two-outcome forms disagree"; });
    }
    const GaussianPrior g(1.0, 0.3);
    const DiscreteLikelihood fair{[](double, int) { return 0.5; }, {0, 1}};
    const double epv = epv_general(make_prior(g), fair);
    c.expect(std::abs(epv - 0.09) < 1e-10,
             [&] { return "uninformative likelihood must return sigma^2"; });
    return c.finish("expected_posterior_variance");
}

CheckResult check_clf_reference(int max_L) {
    Collector c;
    for (Scheme scheme : {Scheme::AF, Scheme::AB}) {
        for (int L = 1; L <= max_L; ++L) {
            const ClfSpec spec = ClfSpec::make(scheme, L);
            std::vector<double> grid(500);
            for (std::size_t i = 0; i < grid.size(); ++i)
                grid[i] = (static_cast<double>(i) + 0.5) * kPi / static_cast<double>(grid.size());
            for (double sigma : {0.2, 1.0 / spec.q}) {
                const ClfPropertyReport rep = clf_properties_check(spec, sigma, grid);
                c.expect(rep.passed, [&] {
                    return rep.failures.empty() ? std::string("property check failed")
                                                : rep.failures.front();
                });
            }
            // sigma -> 0 limits: q^2 off the dead spots, 0 on them.
            CosinePoly delta(std::vector<double>(static_cast<std::size_t>(spec.q) + 1, 0.0));
            delta.coeffs.back() = spec.r % 2 == 0 ? 1.0 : -1.0;
            const double off = vrf_limit_sigma0(delta, kPi / (2.0 * spec.q));
            c.expect(std::abs(off - spec.q * spec.q) < 1e-9,
                     [&] { return "sigma->0 limit off the dead spot is not q^2"; });
            const double dead = vrf_limit_sigma0(delta, kPi / spec.q);
            c.expect(std::abs(dead) < 1e-9, [&] { return "sigma->0 dead-spot limit is not 0"; });
        }
    }
    return c.finish("all_pi_half_reference");
}

CheckResult check_noise_scaling(int max_L) {
    Collector c;
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 100; ++rep) {
        const Scheme scheme = (rng() & 1u) ? Scheme::AF : Scheme::AB;
        const int L = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_L));
        const TunableParams x = random_params(rng, scheme, L);
        const GaussianPrior prior(uniform(rng, 0.2, kPi - 0.2), uniform(rng, 0.05, 0.6));
        const CosinePoly poly = fourier_coefficients(x);
        const BcPair bc = b_chi_gaussian(poly, prior);
        const double f = uniform(rng, 0.0, 0.999);
        const VrfReport noisy = vrf_report(poly, prior, f);
        const double want = f * f * bc.chi * bc.chi / (1.0 - f * f * bc.b * bc.b);
        c.expect(std::abs(noisy.V - want) < 1e-12,
                 [&] { return "noisy variance reduction factor formula"; });
        const double f2 = uniform(rng, f, 1.0);
        c.expect(noisy.V <= vrf_report(poly, prior, f2).V + 1e-12,
                 [&] { return "losing fidelity increased the information gain"; });
    }
    return c.finish("noise_scaling");
}

CheckResult check_optimizer_floor(int max_L) {
    Collector c;
    std::mt19937_64 rng(24);
    for (Scheme scheme : {Scheme::AF, Scheme::AB}) {
        for (int L = 1; L <= max_L; ++L) {
            for (int rep = 0; rep < 2; ++rep) {
                const GaussianPrior prior(uniform(rng, 0.2, kPi - 0.2),
                                          uniform(rng, 0.05, 0.5));
                const OptProblem problem{scheme, L, prior, 2, 40, rng(), 1.0};
                const OptResult result = optimize(problem);
                c.expect(result.V_star >= result.V_clf - 1e-9,
                         [&] { return "optimum fell below the all-pi/2 baseline"; });
                for (std::size_t i = 1; i < result.trace.size(); ++i) {
                    c.expect(result.trace[i] >= result.trace[i - 1] - 1e-12,
                             [&] { return "ascent trace decreased"; });
                }
            }
        }
    }
    return c.finish("optimizer_baseline_floor");
}

CheckResult check_ab_l1_optimality() {
    Collector c;
    for (int i = 1; i <= 21; ++i) {
        const double mu = i * kPi / 22.0;
        for (double sigma : {0.5, 0.2, 0.1, 0.05}) {
            const GaussianPrior prior(mu, sigma);
            const OptResult result = optimize({Scheme::AB, 1, prior, 4, 60, 7, 1.0});
            const double s = std::exp(-0.5 * sigma * sigma) * std::cos(mu);
            const double t = std::exp(-0.5 * sigma * sigma) * std::sin(mu);
            const double ceiling = t * t / (1.0 - s * s);
            c.expect(std::abs(result.V_star - ceiling) < 1e-9,
                     [&] { return "L=1 AB optimum differs from the closed-form ceiling"; });
            const double clf = clf_vrf(ClfSpec::make(Scheme::AB, 1), mu, sigma);
            c.expect(std::abs(result.V_star - clf) < 1e-9,
                     [&] { return "L=1 AB optimum differs from the all-pi/2 value"; });
        }
    }
    return c.finish("ab_l1_optimality");
}

}  // namespace

std::vector<CheckResult> run_validation_checks(ValidationLevel level) {
    const bool full = level == ValidationLevel::Full;
    const int max_n = full ? 13 : 10;
    const int max_af = full ? 3 : 2;
    const int max_ab = full ? 4 : 2;
    const int max_L = full ? 3 : 2;

    std::vector<CheckResult> results;
    results.push_back(check_circuit_unitarity());
    results.push_back(check_bias_symmetry(max_L));
    results.push_back(check_bias_bound(max_L));
    results.push_back(check_af_bias_real(max_L));
    results.push_back(check_reduction_confluence(max_n));
    results.push_back(check_cardinalities(max_n));
    results.push_back(check_reversal_closure(full ? 3 : 2));
    results.push_back(check_series_vs_circuit(max_af, max_ab));
    results.push_back(check_clf_delta_coefficients(max_af, max_ab));
    results.push_back(check_l1_closed_forms());
    results.push_back(check_leading_terms(max_af, max_ab));
    results.push_back(check_csd_csbd(max_L));
    results.push_back(check_product_closure(max_L));
    results.push_back(check_quadrature_vs_closed_form(max_L));
    results.push_back(check_epv());
    results.push_back(check_clf_reference(max_L));
    results.push_back(check_noise_scaling(max_L));
    results.push_back(check_optimizer_floor(full ? 2 : 1));
    if (full) results.push_back(check_ab_l1_optimality());
    return results;
}

}  // namespace elfkit
