#include "elfkit/series_expansion.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace elfkit {

namespace {

constexpr double kPi = std::numbers::pi;

// zeta values for every mask over nbits coordinates, built incrementally:
// zeta[m] = zeta[m without lowest bit] * (sin or cos of that coordinate).
std::vector<double> zeta_table(std::span<const double> x, int nbits) {
    std::vector<double> cosv(static_cast<std::size_t>(nbits));
    std::vector<double> sinv(static_cast<std::size_t>(nbits));
    for (int i = 0; i < nbits; ++i) {
        cosv[static_cast<std::size_t>(i)] = std::cos(x[static_cast<std::size_t>(i)]);
        sinv[static_cast<std::size_t>(i)] = std::sin(x[static_cast<std::size_t>(i)]);
    }
    const std::size_t count = std::size_t{1} << nbits;
    std::vector<double> table(count);
    double all_cos = 1.0;
    for (int i = 0; i < nbits; ++i) all_cos *= cosv[static_cast<std::size_t>(i)];
    table[0] = all_cos;
    for (std::size_t m = 1; m < count; ++m) {
        const int low = std::countr_zero(m);
        const std::size_t lower = m & (m - 1);
        const double c = cosv[static_cast<std::size_t>(low)];
        const double s = sinv[static_cast<std::size_t>(low)];
        // Swap one cos factor for a sin factor. Guard cos = 0 by recomputing.
        if (c != 0.0) {
            table[m] = table[lower] / c * s;
        } else {
            double v = 1.0;
            for (int i = 0; i < nbits; ++i) {
                v *= ((m >> i) & 1u) ? sinv[static_cast<std::size_t>(i)]
                                     : cosv[static_cast<std::size_t>(i)];
            }
            table[m] = v;
        }
    }
    return table;
}

std::uint32_t reverse_bits(std::uint32_t m, int nbits) {
    std::uint32_t r = 0;
    for (int i = 0; i < nbits; ++i) {
        r |= ((m >> i) & 1u) << (nbits - 1 - i);
    }
    return r;
}

}  // namespace

double CosinePoly::eval(double theta) const {
    double acc = 0.0;
    for (std::size_t l = 0; l < coeffs.size(); ++l) {
        acc += coeffs[l] * std::cos(static_cast<double>(l) * theta);
    }
    return acc;
}

double CosinePoly::derivative(double theta, int order) const {
    if (order < 0) throw std::invalid_argument("CosinePoly::derivative: order must be >= 0");
    double acc = 0.0;
    for (std::size_t l = 0; l < coeffs.size(); ++l) {
        const double lf = static_cast<double>(l);
        const double scale = std::pow(lf, order);
        if (scale == 0.0 && order > 0) continue;
        double basis = 0.0;
        switch (order % 4) {
            case 0: basis = std::cos(lf * theta); break;
            case 1: basis = -std::sin(lf * theta); break;
            case 2: basis = -std::cos(lf * theta); break;
            default: basis = std::sin(lf * theta); break;
        }
        acc += coeffs[l] * scale * basis;
    }
    return acc;
}

CosinePoly CosinePoly::scaled(double factor) const {
    CosinePoly out(*this);
    for (double& c : out.coeffs) c *= factor;
    return out;
}

double zeta(const BitString& y, std::span<const double> x) {
    if (y.size() != x.size()) throw std::invalid_argument("zeta: length mismatch");
    double acc = 1.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        acc *= y[i] ? std::sin(x[i]) : std::cos(x[i]);
    }
    return acc;
}

int nu(long long s) {
    const long long r = ((s % 4) + 4) % 4;
    if (r == 0) return 1;
    if (r == 2) return -1;
    return 0;
}

double arg2(double ypart, double xpart) {
    if (ypart == 0.0 && xpart == 0.0) {
        throw std::domain_error("arg2: undefined at (0, 0)");
    }
    return std::atan2(ypart, xpart);
}

std::vector<cplx> q00_fourier(std::span<const double> z) {
    const int n = static_cast<int>(z.size());
    if (n < 1) throw std::invalid_argument("q00_fourier: z must be nonempty");
    if (n > 24) throw std::length_error("q00_fourier: |z| > 24 is not supported");
    const std::vector<double> zt = zeta_table(z, n);
    const int deg = (n + 1) / 2;
    std::vector<cplx> a(static_cast<std::size_t>(deg) + 1, cplx{0.0, 0.0});
    constexpr cplx mi_pow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};  // (-i)^w
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const int l = xi_class_bits(m, n);
        a[static_cast<std::size_t>(l)] += mi_pow[std::popcount(m) % 4] * zt[m];
    }
    return a;
}

CosinePoly fourier_ab(const TunableParams& x) {
    if (x.scheme != Scheme::AB) throw std::invalid_argument("fourier_ab: expected AB parameters");
    const int L = x.L();
    if (L > 12) throw std::length_error("fourier_ab: L > 12; use fourier_numeric");
    const int nbits = 2 * L;

    // The 2^{2L}-entry lookup table is only worth its memory up to 20 bits;
    // beyond that compute each zeta product in place.
    const bool tabulated = nbits <= 20;
    const std::vector<double> zt = tabulated ? zeta_table(x.angles, nbits) : std::vector<double>{};
    std::vector<double> cosv(static_cast<std::size_t>(nbits)), sinv(static_cast<std::size_t>(nbits));
    for (int i = 0; i < nbits; ++i) {
        cosv[static_cast<std::size_t>(i)] = std::cos(x.angles[static_cast<std::size_t>(i)]);
        sinv[static_cast<std::size_t>(i)] = std::sin(x.angles[static_cast<std::size_t>(i)]);
    }

    std::vector<double> mu(static_cast<std::size_t>(L) + 1, 0.0);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << nbits); ++m) {
        const int w = std::popcount(m);
        if (w % 2 != 0) continue;
        const int sign = (w % 4 == 0) ? 1 : -1;
        const int l = xi_class_bits(m, nbits);
        double z;
        if (tabulated) {
            z = zt[m];
        } else {
            z = 1.0;
            for (int i = 0; i < nbits; ++i) {
                z *= ((m >> i) & 1u) ? sinv[static_cast<std::size_t>(i)]
                                     : cosv[static_cast<std::size_t>(i)];
            }
        }
        mu[static_cast<std::size_t>(l)] += sign * z;
    }
    return CosinePoly(std::move(mu));
}

CosinePoly fourier_af(const TunableParams& x) {
    if (x.scheme != Scheme::AF) throw std::invalid_argument("fourier_af: expected AF parameters");
    const int L = x.L();
    if (L > 5) throw std::length_error("fourier_af: L > 5; use fourier_numeric");
    const int nbits = 2 * L;
    const std::uint32_t count = std::uint32_t{1} << nbits;
    const std::vector<double> zt = zeta_table(x.angles, nbits);
    std::vector<std::uint32_t> rev(count);
    for (std::uint32_t c = 0; c < count; ++c) rev[c] = reverse_bits(c, nbits);

    // Full string a . 1 . reverse(c) over 4L+1 positions.
    const int total_bits = 4 * L + 1;
    std::vector<double> mu(static_cast<std::size_t>(2 * L + 1) + 1, 0.0);
    for (std::uint32_t a = 0; a < count; ++a) {
        const int wa = std::popcount(a);
        const double za = zt[a];
        const std::uint64_t base = static_cast<std::uint64_t>(a) | (std::uint64_t{1} << nbits);
        for (std::uint32_t c = 0; c < count; ++c) {
            const int diff = std::popcount(c) - wa;
            if (diff % 2 != 0) continue;
            const int sign = (((diff % 4) + 4) % 4 == 0) ? 1 : -1;
            const std::uint64_t bits = base | (static_cast<std::uint64_t>(rev[c]) << (nbits + 1));
            const int l = xi_class_bits(bits, total_bits);
            mu[static_cast<std::size_t>(l)] += sign * za * zt[c];
        }
    }
    return CosinePoly(std::move(mu));
}

CosinePoly fourier_numeric(Scheme scheme, const TunableParams& x) {
    const int L = x.L();
    if (L > 64) throw std::length_error("fourier_numeric: L > 64 is not supported");
    const int q = scheme_degree(scheme, L);
    const int nodes = q + 1;

    std::vector<double> samples(static_cast<std::size_t>(nodes));
    for (int j = 0; j < nodes; ++j) {
        const double theta = (2.0 * j + 1.0) * kPi / (2.0 * nodes);
        samples[static_cast<std::size_t>(j)] = bias_direct(scheme, theta, x);
    }

    // cos(l theta_j) is orthogonal over these nodes, so the coefficients come
    // out of a single weighted sum per harmonic.
    std::vector<double> mu(static_cast<std::size_t>(q) + 1, 0.0);
    for (int l = 0; l <= q; ++l) {
        double acc = 0.0;
        for (int j = 0; j < nodes; ++j) {
            const double theta = (2.0 * j + 1.0) * kPi / (2.0 * nodes);
            acc += samples[static_cast<std::size_t>(j)] * std::cos(l * theta);
        }
        mu[static_cast<std::size_t>(l)] = (l == 0 ? 1.0 : 2.0) * acc / nodes;
    }
    CosinePoly poly(std::move(mu));

    // Residual check at off-grid nodes; a failure means the sampled function
    // was not the degree-q cosine polynomial the recovery assumes.
    double residual = 0.0;
    for (int j = 0; j < nodes; ++j) {
        const double theta = (j + 1.0) * kPi / (nodes + 1.0);
        residual = std::max(residual,
                            std::abs(poly.eval(theta) - bias_direct(scheme, theta, x)));
    }
    if (residual > 1e-8) {
        throw std::runtime_error("fourier_numeric: recovery residual " +
                                 std::to_string(residual) + " exceeds tolerance");
    }
    return poly;
}

CosinePoly fourier_coefficients(const TunableParams& x, CoeffEngine engine) {
    const int L = x.L();
    switch (engine) {
        case CoeffEngine::Combinatorial:
            return x.scheme == Scheme::AB ? fourier_ab(x) : fourier_af(x);
        case CoeffEngine::Numeric:
            return fourier_numeric(x.scheme, x);
        case CoeffEngine::Auto:
        default: {
            const int cap = x.scheme == Scheme::AB ? 12 : 5;
            if (L <= cap) return x.scheme == Scheme::AB ? fourier_ab(x) : fourier_af(x);
            return fourier_numeric(x.scheme, x);
        }
    }
}

CsdPair csd_ab(const TunableParams& x, std::size_t j, CoeffEngine engine) {
    if (x.scheme != Scheme::AB) throw std::invalid_argument("csd_ab: expected AB parameters");
    if (j >= x.angles.size()) throw std::out_of_range("csd_ab: coordinate index out of range");
    TunableParams at0 = x;
    at0.angles[j] = 0.0;
    TunableParams at90 = x;
    at90.angles[j] = kPi / 2;
    return {fourier_coefficients(at0, engine), fourier_coefficients(at90, engine)};
}

CsbdTriple csbd_af(const TunableParams& x, std::size_t j, CoeffEngine engine) {
    if (x.scheme != Scheme::AF) throw std::invalid_argument("csbd_af: expected AF parameters");
    if (j >= x.angles.size()) throw std::out_of_range("csbd_af: coordinate index out of range");
    TunableParams probe = x;
    probe.angles[j] = 0.0;
    const CosinePoly f0 = fourier_coefficients(probe, engine);
    probe.angles[j] = kPi / 2;
    const CosinePoly f90 = fourier_coefficients(probe, engine);
    probe.angles[j] = kPi / 4;
    const CosinePoly f45 = fourier_coefficients(probe, engine);

    const std::size_t n = f0.coeffs.size();
    CosinePoly c(std::vector<double>(n, 0.0));
    CosinePoly s(std::vector<double>(n, 0.0));
    CosinePoly b(std::vector<double>(n, 0.0));
    for (std::size_t l = 0; l < n; ++l) {
        c.coeffs[l] = 0.5 * (f0.coeffs[l] - f90.coeffs[l]);
        b.coeffs[l] = 0.5 * (f0.coeffs[l] + f90.coeffs[l]);
        s.coeffs[l] = f45.coeffs[l] - b.coeffs[l];
    }
    return {std::move(c), std::move(s), std::move(b)};
}

}  // namespace elfkit
