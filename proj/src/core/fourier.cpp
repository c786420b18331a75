#include "fourier.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "substitution.hpp"

namespace ifs {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx unit_phase(double t) { return {std::cos(kTwoPi * t), std::sin(kTwoPi * t)}; }

// 1 + z + ... + z^{m-1} by Horner-style accumulation
cplx geometric_sum(long m, cplx z) {
    cplx s{1.0, 0.0};
    cplx zp{1.0, 0.0};
    for (long j = 1; j < m; ++j) {
        zp *= z;
        s += zp;
    }
    return s;
}
}  // namespace

DisplacementMatrix displacement_matrix(long m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    const ModuleRing ring(m);
    DisplacementMatrix t;
    t.m = m;
    t.sets[0] = {AlgebraicPoint{0, 0}};  // T00
    t.sets[1] = {AlgebraicPoint{0, 0}};  // T01
    t.sets[2].reserve(std::size_t(m));   // T10 = S
    for (long j = 0; j < m; ++j) t.sets[2].push_back(ring.normalize(AlgebraicPoint{j, 1}));
    return t;
}

cplx p_eval(long m, double k) {
    const double lambda = (1.0 + std::sqrt(4.0 * double(m) + 1.0)) / 2.0;
    return unit_phase(lambda * k) * geometric_sum(m, unit_phase(k));
}

cplx p_tilde_eval(long m, double x, double y) {
    return unit_phase(x) * geometric_sum(m, unit_phase(y));
}

Mat2c b_eval(long m, double k) { return {cplx{1, 0}, cplx{1, 0}, p_eval(m, k), cplx{0, 0}}; }

Mat2c b_tilde_eval(long m, double x, double y) {
    return {cplx{1, 0}, cplx{1, 0}, p_tilde_eval(m, x, y), cplx{0, 0}};
}

Mat4c a_eval(long m, double k) {
    const Mat2c b = b_eval(m, k);
    const cplx blocks[2][2] = {{b.a, b.b}, {b.c, b.d}};
    Mat4c a;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int ii = 0; ii < 2; ++ii)
                for (int jj = 0; jj < 2; ++jj)
                    a.e[std::size_t(2 * i + ii)][std::size_t(2 * j + jj)] =
                        blocks[i][j] * std::conj(blocks[ii][jj]);
    return a;
}

Mat4c u_matrix() {
    const double r = 1.0 / std::sqrt(2.0);
    const cplx one_mi{r, -r};  // (1-i)/sqrt(2)
    const cplx mi{0, -r};      // -i/sqrt(2)
    Mat4c u;
    u.e[0][0] = one_mi;
    u.e[1][1] = cplx{r, 0};
    u.e[1][2] = mi;
    u.e[2][1] = mi;
    u.e[2][2] = cplx{r, 0};
    u.e[3][3] = one_mi;
    return u;
}

RealifiedEval a_u_eval(long m, double k) {
    const cplx p = p_eval(m, k);
    RealifiedEval r;
    r.k = k;
    r.c = p.real();
    r.s = p.imag();
    const double c = r.c, s = r.s;
    r.matrix.e = {{{1, 1, 1, 1},
                   {c + s, s, c, 0},
                   {c - s, c, -s, 0},
                   {c * c + s * s, 0, 0, 0}}};
    return r;
}

bool ZeroSet::contains(double k, double tol) const {
    if (m == 1) return false;
    const double mk = double(m) * k;
    const double near = std::abs(mk - std::nearbyint(mk));
    if (near > tol * double(m)) return false;
    const double ki = std::abs(k - std::nearbyint(k));
    return ki > tol;  // integers are excluded from Z_m
}

double ZeroSet::distance(double k) const {
    if (m == 1) return std::numeric_limits<double>::infinity();
    // nearest point of (1/m)Z, then skip integers
    const double mk = double(m) * k;
    double best = std::numeric_limits<double>::infinity();
    for (double g : {std::floor(mk), std::ceil(mk), std::floor(mk) - 1, std::ceil(mk) + 1}) {
        const double cand = g / double(m);
        const double ci = std::abs(cand - std::nearbyint(cand));
        if (ci < 0.5 / double(m)) continue;  // lands on Z
        best = std::min(best, std::abs(k - cand));
    }
    return best;
}

namespace {

Mat4d a_u_square_step(long m, double k, double lambda) {
    const Mat4d lhs = a_u_eval(m, k / lambda).matrix;
    const Mat4d rhs = a_u_eval(m, k).matrix;
    return lhs * rhs;
}

bool strictly_positive_with_det(const Mat4d& a) {
    for (const auto& row : a.e)
        for (double v : row)
            if (!(v > 0.0)) return false;
    return det4(a) > 0.0;
}

}  // namespace

double epsilon_estimate(long m) {
    const double lambda = eigen_data(m).lambda_plus;
    // scan step adapted to the fastest phase 2*pi*(lambda+m-1)*k in c, s
    const double step = std::min(1e-4, 1.0 / (200.0 * (lambda + double(m))));
    double k = step;
    double last_good = 0.0;
    const double k_cap = 1.0;
    while (k <= k_cap) {
        if (!strictly_positive_with_det(a_u_square_step(m, k, lambda))) break;
        last_good = k;
        k += step;
    }
    if (k > k_cap) return 0.9 * k_cap;
    if (last_good == 0.0) throw std::runtime_error("positivity fails at the first scan point");
    double lo = last_good, hi = k;
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        if (strictly_positive_with_det(a_u_square_step(m, mid, lambda)))
            lo = mid;
        else
            hi = mid;
    }
    return 0.9 * lo;
}

std::array<double, 4> pf_tensor(long m) {
    const EigenData d = eigen_data(m);
    return {d.freq[0] * d.freq[0], d.freq[0] * d.freq[1], d.freq[1] * d.freq[0],
            d.freq[1] * d.freq[1]};
}

std::vector<PositivityStep> positivity_iteration(long m, double k, std::array<double, 4> w0,
                                                 int n) {
    const double eps = epsilon_estimate(m);
    if (!(k > 0.0) || k > eps)
        throw std::invalid_argument("k must lie in (0, epsilon(m)]");
    double mass = 0.0;
    for (double v : w0) {
        if (v < 0.0) throw std::invalid_argument("starting vector must be non-negative");
        mass += v;
    }
    if (mass == 0.0) throw std::invalid_argument("starting vector must be non-zero");

    const double lambda = eigen_data(m).lambda_plus;
    std::vector<PositivityStep> steps;
    steps.reserve(std::size_t(n));
    std::array<double, 4> w = w0;
    double log_norm = 0.0;
    double arg = k;  // k / lambda^{2j-2} at step j
    for (int j = 1; j <= n; ++j) {
        w = a_u_square_step(m, arg, lambda) * w;
        double s = 0.0;
        for (double v : w) s += std::abs(v);
        for (double& v : w) v /= s;
        log_norm += std::log(s);
        steps.push_back({w, log_norm});
        arg /= lambda * lambda;
    }
    return steps;
}

}  // namespace ifs
