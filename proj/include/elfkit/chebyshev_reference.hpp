#pragma once

#include <span>
#include <string>
#include <vector>

#include "elfkit/logical_circuit.hpp"

namespace elfkit {

// All-pi/2 circuit ("Chebyshev likelihood function"); q and r are fixed at
// construction so nothing branches on the scheme afterwards.
struct ClfSpec {
    Scheme scheme;
    int L;
    int q;  // bias degree
    int r;  // sign exponent

    static ClfSpec make(Scheme scheme, int L);
};

// (-1)^r cos(q theta).
double clf_bias(const ClfSpec& spec, double theta);

// q^2 sin^2(q mu) / (e^{q^2 sigma^2} - cos^2(q mu)).
double clf_vrf(const ClfSpec& spec, double mu, double sigma);

struct ClfPropertyReport {
    bool passed = true;
    std::vector<std::string> failures;
    double max_observed = 0.0;
};

// Checks, over the given mu grid: pi/q periodicity, nonnegativity with zeros
// exactly on (pi/q)Z, the maximum q^2 e^{-q^2 sigma^2} attained on odd
// multiples of pi/(2q), and the L-independent bound 1/(e sigma^2).
ClfPropertyReport clf_properties_check(const ClfSpec& spec, double sigma,
                                       std::span<const double> mu_grid);

}  // namespace elfkit
