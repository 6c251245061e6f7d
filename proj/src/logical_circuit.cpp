#include "elfkit/logical_circuit.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace elfkit {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};
}  // namespace

int scheme_degree(Scheme scheme, int L) {
    return scheme == Scheme::AF ? 2 * L + 1 : L;
}

int scheme_r(Scheme scheme, int L) {
    return scheme == Scheme::AF ? 0 : L;
}

const char* scheme_name(Scheme scheme) {
    return scheme == Scheme::AF ? "AF" : "AB";
}

double Unitary2::unitarity_defect() const {
    const Unitary2 g = dagger() * (*this);
    double d = std::abs(g.m00 - cplx{1.0, 0.0});
    d = std::max(d, std::abs(g.m01));
    d = std::max(d, std::abs(g.m10));
    d = std::max(d, std::abs(g.m11 - cplx{1.0, 0.0}));
    return d;
}

Unitary2 pauli_i() { return {}; }
Unitary2 pauli_x() { return {{0, 0}, {1, 0}, {1, 0}, {0, 0}}; }
Unitary2 pauli_y() { return {{0, 0}, {0, -1}, {0, 1}, {0, 0}}; }
Unitary2 pauli_z() { return {{1, 0}, {0, 0}, {0, 0}, {-1, 0}}; }

Unitary2 p_matrix(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {{c, 0}, {s, 0}, {s, 0}, {-c, 0}};
}

TunableParams::TunableParams(std::vector<double> a, Scheme s)
    : angles(std::move(a)), scheme(s) {
    if (angles.size() < 2 || angles.size() % 2 != 0) {
        throw std::invalid_argument("TunableParams: need an even number (>= 2) of angles");
    }
}

TunableParams clf_params(Scheme scheme, int L) {
    if (L < 1) throw std::invalid_argument("clf_params: L must be >= 1");
    return TunableParams(std::vector<double>(static_cast<std::size_t>(2 * L), kPi / 2), scheme);
}

Unitary2 u_rot(double theta, double alpha) {
    const cplx ca{std::cos(alpha), 0.0};
    const cplx msa = -kI * std::sin(alpha);
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    return {ca + msa * ct, msa * st, msa * st, ca - msa * ct};
}

Unitary2 v_rot(double beta) {
    return {std::polar(1.0, -beta), {0, 0}, {0, 0}, std::polar(1.0, beta)};
}

Unitary2 q_product(double theta, std::span<const double> z) {
    if (z.empty()) throw std::invalid_argument("q_product: z must be nonempty");
    Unitary2 acc;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const Unitary2 factor = (i % 2 == 0) ? u_rot(theta, z[i]) : v_rot(z[i]);
        acc = factor * acc;
    }
    return acc;
}

cplx q00(double theta, std::span<const double> z) {
    return q_product(theta, z).m00;
}

double bias_direct(Scheme scheme, double theta, const TunableParams& x) {
    if (x.scheme != scheme) {
        throw std::invalid_argument("bias_direct: scheme tag does not match the parameters");
    }
    double lambda = 0.0;
    if (scheme == Scheme::AB) {
        lambda = q00(theta, x.angles).real();
    } else {
        std::vector<double> z;
        z.reserve(2 * x.angles.size() + 1);
        z.insert(z.end(), x.angles.begin(), x.angles.end());
        z.push_back(kPi / 2);
        for (auto it = x.angles.rbegin(); it != x.angles.rend(); ++it) z.push_back(-*it);
        const cplx raw = kI * q00(theta, z);
        if (std::abs(raw.imag()) > 1e-10) {
            throw std::runtime_error("bias_direct: AF bias has nonvanishing imaginary part");
        }
        lambda = raw.real();
    }
    if (std::abs(lambda) > 1.0 + 1e-10) {
        throw std::runtime_error("bias_direct: |bias| exceeds 1 beyond tolerance");
    }
    return std::clamp(lambda, -1.0, 1.0);
}

double likelihood(Scheme scheme, double theta, int d, const TunableParams& x) {
    if (d != 0 && d != 1) throw std::invalid_argument("likelihood: outcome must be 0 or 1");
    const double lambda = bias_direct(scheme, theta, x);
    return 0.5 * (1.0 + (d == 0 ? lambda : -lambda));
}

double bias_noisy(Scheme scheme, double theta, const TunableParams& x, double fidelity) {
    if (!(fidelity >= 0.0 && fidelity < 1.0)) {
        throw std::invalid_argument("bias_noisy: fidelity must lie in [0, 1)");
    }
    return fidelity * bias_direct(scheme, theta, x);
}

}  // namespace elfkit
