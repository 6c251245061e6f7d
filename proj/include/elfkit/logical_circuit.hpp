#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

namespace elfkit {

using cplx = std::complex<double>;

// Circuit layout producing the bias: ancilla-free (measure the reflection
// operator after the tunable circuit) or ancilla-based (Hadamard test).
enum class Scheme { AF, AB };

// Degree of the bias as a cosine polynomial: 2L+1 (AF) or L (AB).
int scheme_degree(Scheme scheme, int L);

// Sign exponent of the all-pi/2 bias: 0 (AF) or L (AB).
int scheme_r(Scheme scheme, int L);

const char* scheme_name(Scheme scheme);

// 2x2 complex matrix on the logical span{|0>, |1>} of the two-dimensional
// invariant subspace. All circuit evaluation happens here; n-qubit operators
// are never materialized.
struct Unitary2 {
    cplx m00{1.0, 0.0}, m01{0.0, 0.0};
    cplx m10{0.0, 0.0}, m11{1.0, 0.0};

    Unitary2 dagger() const { return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)}; }

    friend Unitary2 operator*(const Unitary2& a, const Unitary2& b) {
        return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
                a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
    }

    // Max entrywise deviation of U^dag U from the identity.
    double unitarity_defect() const;
};

Unitary2 pauli_i();
Unitary2 pauli_x();
Unitary2 pauli_y();
Unitary2 pauli_z();

// P(theta) = cos(theta) Z + sin(theta) X; the measured reflection operator.
Unitary2 p_matrix(double theta);

// theta = arccos(Pi) where Pi is the target overlap; exposed as a convenience,
// all internal machinery works in theta.
inline double theta_from_overlap(double pi_value) { return std::acos(pi_value); }
inline double overlap_from_theta(double theta) { return std::cos(theta); }

// Tunable circuit angles x = (x_1, ..., x_{2L}) plus the scheme tag. Angles
// enter only through cos/sin, so each coordinate is 2pi-periodic.
struct TunableParams {
    std::vector<double> angles;
    Scheme scheme = Scheme::AF;

    TunableParams(std::vector<double> a, Scheme s);

    int L() const { return static_cast<int>(angles.size()) / 2; }
};

// The all-pi/2 angle vector of length 2L.
TunableParams clf_params(Scheme scheme, int L);

// exp(-i alpha P(theta)) = cos(alpha) I - i sin(alpha) P(theta).
Unitary2 u_rot(double theta, double alpha);

// exp(-i beta Z) = diag(e^{-i beta}, e^{i beta}).
Unitary2 v_rot(double beta);

// Alternating product R(z_a) ... V(z_2) U(theta; z_1): factor i is U for odd
// i, V for even i. z must be nonempty.
Unitary2 q_product(double theta, std::span<const double> z);

// <0| Q(theta; z) |0>, the (0,0) entry of the product.
cplx q00(double theta, std::span<const double> z);

// Exact bias Lambda(theta; x) in [-1, 1].
//   AF: Re[ i q00(theta, (x, pi/2, -reverse(x))) ], the raw value is purely
//       real up to 1e-10 (checked).
//   AB: Re q00(theta, x).
// Overshoots past 1 + 1e-10 are errors; within tolerance the value is
// clamped so downstream 1 - b^2 denominators stay nonnegative.
double bias_direct(Scheme scheme, double theta, const TunableParams& x);

// L(theta; d) = (1 + (-1)^d Lambda)/2 for d in {0,1}; the two outcomes sum
// to 1 exactly since both come from one bias evaluation.
double likelihood(Scheme scheme, double theta, int d, const TunableParams& x);

// f * Lambda for a fidelity f in [0,1): depolarizing noise damps the bias
// multiplicatively.
double bias_noisy(Scheme scheme, double theta, const TunableParams& x, double fidelity);

}  // namespace elfkit
