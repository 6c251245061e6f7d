#pragma once

#include <functional>
#include <span>
#include <vector>

#include "elfkit/series_expansion.hpp"

namespace elfkit {

// Gaussian prior over theta. The density lives on all of R; theta is an
// angle in [0, pi] physically, but every closed form below requires the
// untruncated Gaussian, so no renormalization is applied.
struct GaussianPrior {
    double mu;
    double sigma;

    GaussianPrior(double mu_, double sigma_);
    double pdf(double theta) const;
};

// Generic prior for the quadrature path: a density plus an integration
// support that carries essentially all of its mass.
struct Prior {
    std::function<double(double)> pdf;
    double lo;
    double hi;
};

// Support [mu - 10 sigma, mu + 10 sigma]; the neglected tail mass is < 1e-22.
Prior make_prior(const GaussianPrior& g);

// Discrete-outcome likelihood: eval(theta, d) with d ranging over `outcomes`.
struct DiscreteLikelihood {
    std::function<double(double, int)> eval;
    std::vector<int> outcomes;

    // Two-outcome likelihood (1 + (-1)^d Lambda(theta)) / 2.
    static DiscreteLikelihood from_bias(std::function<double(double)> bias);
};

// Adaptive Gauss-Legendre integration to an absolute tolerance, with a fixed
// deterministic subdivision order. Throws a runtime error carrying the
// residual estimate if the tolerance cannot be met.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol = 1e-12);

// I_k(d) = integral theta^k L(theta; d) p(theta) dtheta, k in {0, 1}.
double moment_Ik(const Prior& prior, const DiscreteLikelihood& lik, int k, int d);

// Expected posterior variance sigma^2 + mu^2 - sum_d I_1(d)^2 / I_0(d),
// skipping outcomes with I_0(d) < 1e-14. Prior moments are computed by
// quadrature over the stated support.
double epv_general(const Prior& prior, const DiscreteLikelihood& lik);

// Two-outcome specialization: sigma^2 when I0 is 0 or 1 (within 1e-14),
// otherwise sigma^2 - (I1 - mu I0)^2 / (I0 (1 - I0)).
double epv_two_outcome(double I0, double I1, double mu, double sigma);

struct BcPair {
    double b;
    double chi;
};

// Closed-form expected bias and chi function for a pure cosine bias:
//   b   =  sum_l mu_l e^{-l^2 sigma^2 / 2} cos(l mu)
//   chi = -sum_l mu_l e^{-l^2 sigma^2 / 2} l sin(l mu)  (= db/dmu)
BcPair b_chi_gaussian(const CosinePoly& poly, const GaussianPrior& prior);

// General trigonometric series with both cosine (c_l) and sine (d_l) terms.
BcPair b_chi_fourier(std::span<const double> c, std::span<const double> d,
                     const GaussianPrior& prior);

// Quadrature route for an arbitrary bias function; the closed forms above
// are validated against this.
BcPair b_chi_quadrature(const std::function<double(double)>& bias,
                        const GaussianPrior& prior);

// Variance reduction factor chi^2 / (1 - b^2); 0 at |b| = 1 (constant-bias
// convention). |b| > 1 beyond tolerance is an invariant violation.
double vrf(double b, double chi);

// Truncated Taylor route: b = sum_j derivs[2j] sigma^{2j} / (2j)!!,
// chi likewise from odd derivatives. The *_tail fields hold the magnitude of
// the last included term of each sum as a truncation-error proxy.
struct TaylorBc {
    double b;
    double chi;
    double b_tail;
    double chi_tail;
};
TaylorBc b_chi_taylor(std::span<const double> derivs, double sigma);

// Fisher information Lambda'(mu)^2 / (1 - Lambda(mu)^2) of the two-outcome
// likelihood. Domain error within 1e-12 of |Lambda(mu)| = 1; use
// vrf_limit_sigma0 there.
double fisher_info(const CosinePoly& poly, double mu);

// lim_{sigma -> 0} V(mu, sigma). Equals the Fisher information away from
// |Lambda(mu)| = 1; at |Lambda(mu)| = 1 the limit is resolved from the
// sigma-derivative tables of chi^2 and 1 - b^2 at orders 0, 2, 4, 6. If all
// tabulated orders vanish the limit is reported as unresolved.
double vrf_limit_sigma0(const CosinePoly& poly, double mu);

struct VrfReport {
    double b;
    double chi;
    double V;
    double epv;  // sigma^2 (1 - sigma^2 V)
};

// Full pipeline for a cosine bias under a Gaussian prior; fidelity < 1
// damps b and chi multiplicatively before forming V.
VrfReport vrf_report(const CosinePoly& poly, const GaussianPrior& prior,
                     double fidelity = 1.0);

}  // namespace elfkit
