#include "elfkit/bayes_engine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace elfkit {

namespace {

constexpr double kPi = std::numbers::pi;

// 15-point Gauss-Legendre rule on [-1, 1]; nodes found by Newton iteration on
// the Legendre recurrence. Computed once.
struct GaussRule {
    std::array<double, 15> nodes{};
    std::array<double, 15> weights{};
};

const GaussRule& gauss_rule() {
    static const GaussRule rule = [] {
        GaussRule r;
        constexpr int n = 15;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = x;
                for (int j = 2; j <= n; ++j) {
                    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            r.nodes[static_cast<std::size_t>(i)] = x;
            r.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        return r;
    }();
    return rule;
}

double gauss_panel(const std::function<double(double)>& f, double a, double b) {
    const GaussRule& r = gauss_rule();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        acc += r.weights[i] * f(mid + half * r.nodes[i]);
    }
    return acc * half;
}

double integrate_rec(const std::function<double(double)>& f, double a, double b,
                     double tol, double whole, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gauss_panel(f, a, mid);
    const double right = gauss_panel(f, mid, b);
    const double delta = left + right - whole;
    if (std::abs(delta) <= tol) return left + right;
    if (depth >= 48) {
        throw std::runtime_error("integrate: quadrature did not converge, residual estimate " +
                                 std::to_string(std::abs(delta)));
    }
    return integrate_rec(f, a, mid, 0.5 * tol, left, depth + 1) +
           integrate_rec(f, mid, b, 0.5 * tol, right, depth + 1);
}

double double_factorial(int n) {
    double acc = 1.0;
    for (int k = n; k >= 2; k -= 2) acc *= k;
    return acc;
}

double factorial(int n) {
    double acc = 1.0;
    for (int k = 2; k <= n; ++k) acc *= k;
    return acc;
}

}  // namespace

GaussianPrior::GaussianPrior(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
    if (!(sigma > 0.0)) throw std::invalid_argument("GaussianPrior: sigma must be positive");
}

double GaussianPrior::pdf(double theta) const {
    const double z = (theta - mu) / sigma;
    return std::exp(-0.5 * z * z) / (std::sqrt(2.0 * kPi) * sigma);
}

Prior make_prior(const GaussianPrior& g) {
    return {[g](double theta) { return g.pdf(theta); }, g.mu - 10.0 * g.sigma,
            g.mu + 10.0 * g.sigma};
}

DiscreteLikelihood DiscreteLikelihood::from_bias(std::function<double(double)> bias) {
    auto fn = [bias = std::move(bias)](double theta, int d) {
        const double lambda = bias(theta);
        return 0.5 * (1.0 + (d == 0 ? lambda : -lambda));
    };
    return {std::move(fn), {0, 1}};
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol) {
    if (!(hi > lo)) throw std::invalid_argument("integrate: empty interval");
    const double whole = gauss_panel(f, lo, hi);
    return integrate_rec(f, lo, hi, abs_tol, whole, 0);
}

double moment_Ik(const Prior& prior, const DiscreteLikelihood& lik, int k, int d) {
    if (k != 0 && k != 1) throw std::invalid_argument("moment_Ik: k must be 0 or 1");
    auto f = [&](double theta) {
        return std::pow(theta, k) * lik.eval(theta, d) * prior.pdf(theta);
    };
    return integrate(f, prior.lo, prior.hi);
}

double epv_general(const Prior& prior, const DiscreteLikelihood& lik) {
    const double mu = integrate([&](double t) { return t * prior.pdf(t); }, prior.lo, prior.hi);
    const double var = integrate(
        [&](double t) { return (t - mu) * (t - mu) * prior.pdf(t); }, prior.lo, prior.hi);

    double info = 0.0;
    for (int d : lik.outcomes) {
        const double i0 = moment_Ik(prior, lik, 0, d);
        if (i0 < 1e-14) continue;  // outcome has no mass; skipped by convention
        const double i1 = moment_Ik(prior, lik, 1, d);
        info += i1 * i1 / i0;
    }
    double epv = var + mu * mu - info;
    if (epv < 0.0) {
        if (epv < -1e-10) throw std::runtime_error("epv_general: negative expected posterior variance");
        epv = 0.0;
    }
    if (epv > var + 1e-10) {
        throw std::runtime_error("epv_general: expected posterior variance exceeds the prior variance");
    }
    return epv;
}

double epv_two_outcome(double I0, double I1, double mu, double sigma) {
    if (I0 < 0.0 || I0 > 1.0) throw std::invalid_argument("epv_two_outcome: I0 must lie in [0, 1]");
    const double s2 = sigma * sigma;
    if (I0 <= 1e-14 || I0 >= 1.0 - 1e-14) return s2;
    const double num = I1 - mu * I0;
    return s2 - num * num / (I0 * (1.0 - I0));
}

BcPair b_chi_gaussian(const CosinePoly& poly, const GaussianPrior& prior) {
    double b = 0.0, chi = 0.0;
    for (std::size_t l = 0; l < poly.coeffs.size(); ++l) {
        const double lf = static_cast<double>(l);
        const double damp = std::exp(-0.5 * lf * lf * prior.sigma * prior.sigma);
        b += poly.coeffs[l] * damp * std::cos(lf * prior.mu);
        if (l > 0) chi -= poly.coeffs[l] * damp * lf * std::sin(lf * prior.mu);
    }
    return {b, chi};
}

BcPair b_chi_fourier(std::span<const double> c, std::span<const double> d,
                     const GaussianPrior& prior) {
    const std::size_t n = std::max(c.size(), d.size());
    double b = 0.0, chi = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        const double cl = l < c.size() ? c[l] : 0.0;
        const double dl = l < d.size() ? d[l] : 0.0;
        const double lf = static_cast<double>(l);
        const double damp = std::exp(-0.5 * lf * lf * prior.sigma * prior.sigma);
        b += damp * (cl * std::cos(lf * prior.mu) + dl * std::sin(lf * prior.mu));
        if (l > 0) chi += damp * lf * (dl * std::cos(lf * prior.mu) - cl * std::sin(lf * prior.mu));
    }
    return {b, chi};
}

BcPair b_chi_quadrature(const std::function<double(double)>& bias,
                        const GaussianPrior& prior) {
    const Prior p = make_prior(prior);
    const double b = integrate([&](double t) { return p.pdf(t) * bias(t); }, p.lo, p.hi);
    const double inv_s2 = 1.0 / (prior.sigma * prior.sigma);
    const double chi = integrate(
        [&](double t) { return inv_s2 * (t - prior.mu) * p.pdf(t) * bias(t); }, p.lo, p.hi);
    return {b, chi};
}

double vrf(double b, double chi) {
    if (std::abs(b) > 1.0 + 1e-12) {
        throw std::invalid_argument("vrf: |b| > 1 violates the bias bound");
    }
    if (std::abs(b) >= 1.0 - 1e-12) return 0.0;
    return chi * chi / (1.0 - b * b);
}

TaylorBc b_chi_taylor(std::span<const double> derivs, double sigma) {
    if (derivs.size() < 3) {
        throw std::invalid_argument("b_chi_taylor: need derivatives up to order >= 2");
    }
    const int K = static_cast<int>(derivs.size()) - 1;
    TaylorBc out{0.0, 0.0, 0.0, 0.0};
    for (int j = 0; 2 * j <= K; ++j) {
        const double term = derivs[static_cast<std::size_t>(2 * j)] *
                            std::pow(sigma, 2 * j) / double_factorial(2 * j);
        out.b += term;
        out.b_tail = std::abs(term);
    }
    for (int j = 0; 2 * j + 1 <= K; ++j) {
        const double term = derivs[static_cast<std::size_t>(2 * j + 1)] *
                            std::pow(sigma, 2 * j) / double_factorial(2 * j);
        out.chi += term;
        out.chi_tail = std::abs(term);
    }
    return out;
}

double fisher_info(const CosinePoly& poly, double mu) {
    const double lambda = poly.eval(mu);
    if (std::abs(std::abs(lambda) - 1.0) <= 1e-12) {
        throw std::domain_error("fisher_info: |Lambda(mu)| = 1; use vrf_limit_sigma0");
    }
    const double slope = poly.derivative(mu, 1);
    return slope * slope / (1.0 - lambda * lambda);
}

double vrf_limit_sigma0(const CosinePoly& poly, double mu) {
    const double lambda = poly.eval(mu);
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12) return fisher_info(poly, mu);

    // sigma-derivatives of chi^2 and 1 - b^2 at sigma = 0, even orders up to
    // 6, expressed through theta-derivatives of the bias at mu. The limit is
    // the ratio at the first order where either is nonzero.
    std::array<double, 8> d{};
    for (int k = 0; k <= 7; ++k) d[static_cast<std::size_t>(k)] = poly.derivative(mu, k);

    const auto nonzero = [](double value, double scale) {
        return std::abs(value) > 1e-10 * std::max(scale, 1.0);
    };

    for (int n = 0; n <= 6; n += 2) {
        double num = 0.0, num_scale = 0.0;
        double den = (n == 0) ? 1.0 : 0.0;
        double den_scale = (n == 0) ? 1.0 : 0.0;
        for (int k = 0; k <= n; k += 2) {
            const double coeff =
                factorial(n) / (double_factorial(k) * double_factorial(n - k));
            const double tn = coeff * d[static_cast<std::size_t>(n - k + 1)] *
                              d[static_cast<std::size_t>(k + 1)];
            num += tn;
            num_scale += std::abs(tn);
            const double td =
                coeff * d[static_cast<std::size_t>(n - k)] * d[static_cast<std::size_t>(k)];
            den -= td;
            den_scale += std::abs(td);
        }
        const bool num_nz = nonzero(num, num_scale);
        const bool den_nz = nonzero(den, den_scale);
        if (num_nz || den_nz) {
            if (!den_nz) {
                throw std::runtime_error(
                    "vrf_limit_sigma0: denominator table vanishes at order " + std::to_string(n) +
                    " while the numerator does not; limit diverges");
            }
            const double v = num / den;
            return v < 0.0 ? 0.0 : v;
        }
    }
    throw std::runtime_error(
        "vrf_limit_sigma0: all tabulated orders (0, 2, 4, 6) vanish; limit unresolved");
}

VrfReport vrf_report(const CosinePoly& poly, const GaussianPrior& prior, double fidelity) {
    if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
        throw std::invalid_argument("vrf_report: fidelity must lie in [0, 1]");
    }
    const BcPair bc = b_chi_gaussian(poly, prior);
    const double b = fidelity * bc.b;
    const double chi = fidelity * bc.chi;
    const double V = vrf(b, chi);
    const double s2 = prior.sigma * prior.sigma;
    return {b, chi, V, s2 * (1.0 - s2 * V)};
}

}  // namespace elfkit
