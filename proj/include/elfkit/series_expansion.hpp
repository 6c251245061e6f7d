#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "elfkit/logical_circuit.hpp"
#include "elfkit/pq_combinatorics.hpp"

namespace elfkit {

// Cosine polynomial Lambda(theta) = sum_l coeffs[l] cos(l theta).
struct CosinePoly {
    std::vector<double> coeffs;  // mu_0 .. mu_deg

    CosinePoly() = default;
    explicit CosinePoly(std::vector<double> c) : coeffs(std::move(c)) {}

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double theta) const;

    // d^order/dtheta^order of the polynomial, evaluated analytically via
    // cos(l theta + order * pi/2).
    double derivative(double theta, int order = 1) const;

    CosinePoly scaled(double factor) const;
};

// zeta_y(x) = prod_{y_a = 0} cos(x_a) * prod_{y_b = 1} sin(x_b).
double zeta(const BitString& y, std::span<const double> x);

// nu_s = Re(i^s) in {-1, 0, 1}; defined for negative s via true modulo.
int nu(long long s);

// atan2 with the (0,0) input rejected as a domain error; Arg[C + iS] picks
// the per-coordinate maximizer of C cos(x) + S sin(x).
double arg2(double ypart, double xpart);

// Complex Fourier coefficients a_l of <0|Q(theta; z)|0> = sum a_l cos(l theta),
// a_l = sum over strings y with harmonic index l of (-i)^wt(y) zeta_y(z).
// Exponential in |z|; guarded at |z| <= 24.
std::vector<cplx> q00_fourier(std::span<const double> z);

enum class CoeffEngine {
    Auto,           // combinatorial within its capacity, numeric beyond
    Combinatorial,  // explicit sums over bit strings / string pairs
    Numeric,        // exact cosine-polynomial recovery from circuit samples
};

// AB coefficients mu_l = sum_{y: index l} nu_wt(y) zeta_y(x); one pass over
// all 2^{2L} strings. Guarded at L <= 12.
CosinePoly fourier_ab(const TunableParams& x);

// AF coefficients mu_l = sum over pairs (a, c) with a.1.reverse(c) of index l
// of nu_{wt(c)-wt(a)} zeta_a(x) zeta_c(x); one pass over 4^{2L} pairs.
// Guarded at L <= 5; use fourier_numeric for larger L.
CosinePoly fourier_af(const TunableParams& x);

// Recovers the degree-q coefficient vector exactly from q+1 bias samples at
// equally spaced interior nodes theta_j = (2j+1) pi / (2(q+1)) via the
// discrete cosine orthogonality on that grid. Works for any L <= 64.
CosinePoly fourier_numeric(Scheme scheme, const TunableParams& x);

// Engine dispatch: Auto picks the combinatorial path up to L = 5 (AF) or
// L = 12 (AB) and the numeric path beyond.
CosinePoly fourier_coefficients(const TunableParams& x, CoeffEngine engine = CoeffEngine::Auto);

// Coefficient-level decomposition in one coordinate (0-based index j).
// AB (degree 1 in each angle): mu(x) = c * cos(x_j) + s * sin(x_j).
struct CsdPair {
    CosinePoly c, s;
};

// AF (degree 2): mu(x) = c * cos(2 x_j) + s * sin(2 x_j) + b.
struct CsbdTriple {
    CosinePoly c, s, b;
};

CsdPair csd_ab(const TunableParams& x, std::size_t j, CoeffEngine engine = CoeffEngine::Auto);
CsbdTriple csbd_af(const TunableParams& x, std::size_t j, CoeffEngine engine = CoeffEngine::Auto);

}  // namespace elfkit
