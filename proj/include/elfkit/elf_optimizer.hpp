#pragma once

#include <cstdint>
#include <vector>

#include "elfkit/bayes_engine.hpp"
#include "elfkit/chebyshev_reference.hpp"

namespace elfkit {

// Maximize the variance reduction factor V(mu, sigma; x) over the angle box
// (-pi, pi]^{2L}. V is multimodal; the result is the best of several
// deterministic coordinate-ascent runs, not a certified global optimum.
struct OptProblem {
    Scheme scheme;
    int L;
    GaussianPrior prior;
    int restarts = 4;     // random starts on top of the all-pi/2 seeds
    int max_sweeps = 60;  // per start
    std::uint64_t seed = 0;
    double fidelity = 1.0;
};

struct OptResult {
    TunableParams x_star;
    double V_star = 0.0;
    double V_clf = 0.0;          // objective at the all-pi/2 baseline
    std::vector<double> trace;   // per-sweep V of the winning start
    bool degenerate = false;     // chi vanished at every start (V identically 0)
};

// V for given angles: Fourier coefficients -> (b, chi) -> chi^2/(1 - b^2),
// with optional fidelity damping. Combinatorial coefficients for small L,
// sampled recovery beyond (AF at L >= 3, AB at L > 12).
double objective(Scheme scheme, int L, const GaussianPrior& prior, const TunableParams& x,
                 double fidelity = 1.0);

// One pass over the coordinates. Holding the others fixed, b and chi are
// short trigonometric functions of the active angle (degree 1 for AB, double
// angle plus constant for AF) built from the coefficient-level decomposition,
// so each 1-D subproblem is maximized by a dense scan plus golden-section
// refinement. A coordinate moves only if V improves by at least 1e-14.
TunableParams coordinate_sweep(const TunableParams& x, const GaussianPrior& prior,
                               double fidelity = 1.0);

// Multi-start ascent: the all-pi/2 point, two perturbed copies of it, and
// `restarts` seeded uniform draws. Ties within 1e-12 of the best V go to the
// candidate closest (in max-norm) to the all-pi/2 point. Deterministic for a
// fixed seed.
OptResult optimize(const OptProblem& problem);

}  // namespace elfkit
