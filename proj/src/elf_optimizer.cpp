#include "elfkit/elf_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace elfkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kScanPoints = 720;
constexpr double kAcceptGain = 1e-14;

double wrap_angle(double t) {
    double w = std::remainder(t, 2.0 * kPi);
    if (w <= -kPi) w += 2.0 * kPi;
    return w;
}

CoeffEngine pick_engine(Scheme scheme, int L) {
    if (scheme == Scheme::AB) return L <= 12 ? CoeffEngine::Combinatorial : CoeffEngine::Numeric;
    return L <= 2 ? CoeffEngine::Combinatorial : CoeffEngine::Numeric;
}

// b and chi restricted to one coordinate: b(t) = bc cos(w t) + bs sin(w t) + bb
// with w = 1 (AB) or w = 2 (AF), and likewise for chi.
struct CoordinateResponse {
    double bc, bs, bb;
    double cc, cs, cb;
    int w;
    double fidelity;

    double value(double t) const {
        const double c = std::cos(w * t);
        const double s = std::sin(w * t);
        const double b = fidelity * (bc * c + bs * s + bb);
        const double chi = fidelity * (cc * c + cs * s + cb);
        const double denom = 1.0 - b * b;
        if (denom < 1e-12) return 0.0;
        return chi * chi / denom;
    }
};

CoordinateResponse coordinate_response(const TunableParams& x, std::size_t j,
                                       const GaussianPrior& prior, double fidelity,
                                       CoeffEngine engine) {
    if (x.scheme == Scheme::AB) {
        const CsdPair pair = csd_ab(x, j, engine);
        const BcPair bcC = b_chi_gaussian(pair.c, prior);
        const BcPair bcS = b_chi_gaussian(pair.s, prior);
        return {bcC.b, bcS.b, 0.0, bcC.chi, bcS.chi, 0.0, 1, fidelity};
    }
    const CsbdTriple triple = csbd_af(x, j, engine);
    const BcPair bcC = b_chi_gaussian(triple.c, prior);
    const BcPair bcS = b_chi_gaussian(triple.s, prior);
    const BcPair bcB = b_chi_gaussian(triple.b, prior);
    return {bcC.b, bcS.b, bcB.b, bcC.chi, bcS.chi, bcB.chi, 2, fidelity};
}

// Dense scan over (-pi, pi] followed by golden-section refinement around the
// best grid point. The grid value is kept as a floor in case the refined
// bracket is not unimodal.
void maximize_1d(const CoordinateResponse& resp, double& best_t, double& best_v) {
    const double h = 2.0 * kPi / kScanPoints;
    for (int i = 0; i < kScanPoints; ++i) {
        const double t = -kPi + (i + 1) * h;
        const double v = resp.value(t);
        if (v > best_v) {
            best_v = v;
            best_t = t;
        }
    }

    double a = best_t - h;
    double b = best_t + h;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = resp.value(c);
    double fd = resp.value(d);
    while (b - a > 1e-12) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = resp.value(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = resp.value(d);
        }
    }
    const double mid = 0.5 * (a + b);
    const double fm = resp.value(mid);
    if (fm > best_v) {
        best_v = fm;
        best_t = mid;
    }
}

TunableParams sweep_once(const TunableParams& x, const GaussianPrior& prior, double fidelity,
                         CoeffEngine engine) {
    TunableParams cur = x;
    for (std::size_t j = 0; j < cur.angles.size(); ++j) {
        const CoordinateResponse resp = coordinate_response(cur, j, prior, fidelity, engine);
        const double cur_v = resp.value(cur.angles[j]);
        double best_t = cur.angles[j];
        double best_v = cur_v;
        maximize_1d(resp, best_t, best_v);
        if (best_v - cur_v >= kAcceptGain) {
            cur.angles[j] = wrap_angle(best_t);
        }
    }
    return cur;
}

}  // namespace

double objective(Scheme scheme, int L, const GaussianPrior& prior, const TunableParams& x,
                 double fidelity) {
    if (x.scheme != scheme || x.L() != L) {
        throw std::invalid_argument("objective: parameters do not match the problem");
    }
    const CosinePoly poly = fourier_coefficients(x, pick_engine(scheme, L));
    return vrf_report(poly, prior, fidelity).V;
}

TunableParams coordinate_sweep(const TunableParams& x, const GaussianPrior& prior,
                               double fidelity) {
    return sweep_once(x, prior, fidelity, pick_engine(x.scheme, x.L()));
}

OptResult optimize(const OptProblem& problem) {
    if (problem.L < 1) throw std::invalid_argument("optimize: L must be >= 1");
    if (problem.restarts < 0 || problem.max_sweeps < 1) {
        throw std::invalid_argument("optimize: invalid budget");
    }
    if (!(problem.fidelity >= 0.0 && problem.fidelity <= 1.0)) {
        throw std::invalid_argument("optimize: fidelity must lie in [0, 1]");
    }

    const CoeffEngine engine = pick_engine(problem.scheme, problem.L);
    const TunableParams clf = clf_params(problem.scheme, problem.L);
    const double v_clf =
        objective(problem.scheme, problem.L, problem.prior, clf, problem.fidelity);

    std::vector<TunableParams> starts;
    starts.push_back(clf);
    for (double delta : {0.05, -0.05}) {
        TunableParams nudged = clf;
        for (double& a : nudged.angles) a = wrap_angle(a + delta);
        starts.push_back(nudged);
    }
    std::mt19937_64 rng(problem.seed);
    for (int r = 0; r < problem.restarts; ++r) {
        std::vector<double> angles(clf.angles.size());
        for (double& a : angles) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            a = kPi - 2.0 * kPi * u;  // uniform over (-pi, pi]
        }
        starts.emplace_back(std::move(angles), problem.scheme);
    }

    OptResult result{clf, -1.0, v_clf, {}, false};
    double best_dist = 0.0;
    const auto clf_distance = [&clf](const TunableParams& x) {
        double d = 0.0;
        for (std::size_t i = 0; i < x.angles.size(); ++i) {
            d = std::max(d, std::abs(x.angles[i] - clf.angles[i]));
        }
        return d;
    };

    for (const TunableParams& start : starts) {
        TunableParams cur = start;
        double v = objective(problem.scheme, problem.L, problem.prior, cur, problem.fidelity);
        std::vector<double> trace{v};
        for (int sweep = 0; sweep < problem.max_sweeps; ++sweep) {
            cur = sweep_once(cur, problem.prior, problem.fidelity, engine);
            const double v_next =
                objective(problem.scheme, problem.L, problem.prior, cur, problem.fidelity);
            trace.push_back(v_next);
            const double gain = v_next - v;
            v = std::max(v, v_next);
            if (gain < 1e-12) break;
        }
        const double dist = clf_distance(cur);
        const bool better = v > result.V_star + 1e-12;
        const bool tied = std::abs(v - result.V_star) <= 1e-12;
        if (better || (tied && dist < best_dist)) {
            result.x_star = cur;
            result.V_star = v;
            result.trace = std::move(trace);
            best_dist = dist;
        }
    }

    result.degenerate = result.V_star < 1e-18;
    if (result.degenerate) result.V_star = std::max(result.V_star, 0.0);
    return result;
}

}  // namespace elfkit
