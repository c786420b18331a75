#include "cocycle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fourier.hpp"
#include "orbit.hpp"
#include "parallel.hpp"
#include "substitution.hpp"

namespace ifs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx unit_phase(double t) { return {std::cos(kTwoPi * t), std::sin(kTwoPi * t)}; }

cplx geometric_sum(long m, cplx z) {
    cplx s{1.0, 0.0};
    cplx zp{1.0, 0.0};
    for (long j = 1; j < m; ++j) {
        zp *= z;
        s += zp;
    }
    return s;
}

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

struct Rescaler {
    Mat2c p{cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}};
    double log_scale = 0.0;

    void right_mul_b(cplx pval) {
        // P <- P * [[1,1],[pval,0]]
        const Mat2c next{p.a + p.b * pval, p.a, p.c + p.d * pval, p.c};
        p = next;
        renorm();
    }
    void left_mul(const Mat2c& f) {
        p = f * p;
        renorm();
    }
    void right_mul(const Mat2c& f) {
        p = p * f;
        renorm();
    }
    void renorm() {
        const double f = p.frobenius();
        p.scale(1.0 / f);
        log_scale += std::log(f);
    }
};

}  // namespace

CocycleAccumulator cocycle_product(long m, double k, long n) {
    require(m >= 1, "m must be >= 1");
    require(n >= 1, "n must be >= 1");
    TorusOrbit orbit(m, k);
    Rescaler acc;
    for (long j = 0; j < n; ++j) {
        acc.right_mul_b(unit_phase(orbit.x()) * geometric_sum(m, unit_phase(orbit.y())));
        orbit.advance();
    }
    return {acc.p, acc.log_scale, n, k};
}

double chi_b_estimate(long m, double k, long n) {
    return cocycle_product(m, k, n).log_scale / double(n);
}

LyapunovEstimate lyapunov_pair(long m, double k, long n) {
    require(m >= 1, "m must be >= 1");
    require(n >= 1, "n must be >= 1");
    const double log_sqrt_lambda = 0.5 * std::log(eigen_data(m).lambda_plus);

    TorusOrbit orbit(m, k);
    Rescaler fwd;
    Rescaler inv;
    bool inverse_ok = true;
    for (long j = 0; j < n; ++j) {
        const cplx p = unit_phase(orbit.x()) * geometric_sum(m, unit_phase(orbit.y()));
        fwd.right_mul_b(p);
        if (std::abs(p) < 1e-9) {
            inverse_ok = false;  // orbit met Z_m; the inverse factor blows up
        } else if (inverse_ok) {
            // B^{-1} = [[0, 1/p],[1, -1/p]]; newest factor joins on the left
            inv.left_mul(Mat2c{cplx{0, 0}, cplx{1, 0} / p, cplx{1, 0}, cplx{-1, 0} / p});
        }
        orbit.advance();
    }

    LyapunovEstimate est;
    est.n = n;
    est.k = k;
    est.chi_b = fwd.log_scale / double(n);
    est.chi_max = log_sqrt_lambda + est.chi_b;
    est.chi_min = log_sqrt_lambda - est.chi_b;
    est.inverse_ok = inverse_ok;
    est.chi_min_inverse =
        inverse_ok ? std::log(eigen_data(m).lambda_plus) -
                         (log_sqrt_lambda + inv.log_scale / double(n))
                   : std::numeric_limits<double>::quiet_NaN();
    return est;
}

DetAverage det_average(long m, double k, long n) {
    require(m >= 1, "m must be >= 1");
    require(n >= 1, "n must be >= 1");
    // |det B| = |p| = |1 + z + ... + z^{m-1}|: the phase factor e^{2 pi i
    // lambda k} has modulus exactly 1 and is dropped, which keeps the m = 1
    // average identically zero.
    //
    // The rational orbit cannot land on Z_m exactly (the denominator is a
    // prime larger than m), so an intended zero-set hit shows up as a value
    // at the representation-accuracy scale ~ m/2^62; anything below 1e-14
    // certifies one and marks the sample pathological.
    TorusOrbit orbit(m, k);
    double sum = 0.0;
    long hits = 0;
    for (long j = 0; j < n; ++j) {
        const double v = std::abs(geometric_sum(m, unit_phase(orbit.y())));
        if (v < 1e-14)
            ++hits;
        else
            sum += std::log(v);
        orbit.advance();
    }
    return {sum / double(n), hits};
}

namespace {

// log ||B^{(N)}~(x,y)||_F^2 evaluated by direct product; grid arguments are
// dyadic and N is small, so plain doubles track the torus map exactly here.
double log_norm2_torus(long m, long N, double x, double y) {
    cplx p = p_tilde_eval(m, x, y);
    cplx a{1, 0}, b{1, 0}, c = p, d{0, 0};
    for (long j = 1; j < N; ++j) {
        const double nx = std::fmod(x + double(m) * y, 1.0);
        y = x;
        x = nx;
        p = p_tilde_eval(m, x, y);
        const cplx na = a + b * p, nc = c + d * p;
        b = a;
        d = c;
        a = na;
        c = nc;
    }
    return std::log(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
}

double log_norm2_line(long m, long lambda_int, long N, double k) {
    cplx p = unit_phase(std::fmod(double(lambda_int) * k, 1.0)) * geometric_sum(m, unit_phase(k));
    cplx a{1, 0}, b{1, 0}, c = p, d{0, 0};
    double y = k;
    for (long j = 1; j < N; ++j) {
        y = std::fmod(double(lambda_int) * y, 1.0);
        p = unit_phase(std::fmod(double(lambda_int) * y, 1.0)) * geometric_sum(m, unit_phase(y));
        const cplx na = a + b * p, nc = c + d * p;
        b = a;
        d = c;
        a = na;
        c = nc;
    }
    return std::log(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
}

// Midpoint rule over [0,1]^2 with deterministic row-wise pairwise reduction.
double torus_mean(long m, long N, long res) {
    std::vector<double> row_sums(std::size_t(res), 0.0);
    parallel_for(0, res, [&](long i) {
        std::vector<double> vals(std::size_t(res), 0.0);
        const double x = (double(i) + 0.5) / double(res);
        for (long j = 0; j < res; ++j)
            vals[std::size_t(j)] = log_norm2_torus(m, N, x, (double(j) + 0.5) / double(res));
        row_sums[std::size_t(i)] = pairwise_sum(vals.data(), vals.size());
    });
    return pairwise_sum(row_sums.data(), row_sums.size()) / (double(res) * double(res)) /
           double(N);
}

double line_mean(long m, long lambda_int, long N, long res) {
    // 1-d grid comparable in point count to the res x res torus grid
    const long n_pts = res * res;
    const long chunk = 4096;
    const long n_chunks = (n_pts + chunk - 1) / chunk;
    std::vector<double> chunk_sums(std::size_t(n_chunks), 0.0);
    parallel_for(0, n_chunks, [&](long ci) {
        std::vector<double> vals;
        vals.reserve(std::size_t(chunk));
        for (long j = ci * chunk; j < std::min(n_pts, (ci + 1) * chunk); ++j)
            vals.push_back(log_norm2_line(m, lambda_int, N, (double(j) + 0.5) / double(n_pts)));
        chunk_sums[std::size_t(ci)] = pairwise_sum(vals.data(), vals.size());
    });
    return pairwise_sum(chunk_sums.data(), chunk_sums.size()) / double(n_pts) / double(N);
}

}  // namespace

MeanEstimate mean_log_norm(long m, long N, long resolution, MeanRoute route) {
    require(m >= 1, "m must be >= 1");
    require(N >= 1, "N must be >= 1");
    require(resolution >= 8, "resolution too small");
    const SpectralClass cls = classify(m);
    const bool integer_lambda = cls.tag == SpectralTag::IntegerMultiplier;
    if (route == MeanRoute::Auto) route = integer_lambda ? MeanRoute::Line : MeanRoute::Torus;
    if (route == MeanRoute::Line && !integer_lambda)
        throw std::invalid_argument("line route requires an integer inflation multiplier");

    const auto eval = [&](long res) {
        return route == MeanRoute::Line ? line_mean(m, cls.ell + 1, N, res)
                                        : torus_mean(m, N, res);
    };
    const double coarse = eval(resolution / 2);
    const double fine = eval(resolution);
    MeanEstimate est;
    est.N = N;
    est.value = fine;
    est.grid_resolution = resolution;
    est.error_estimate = std::abs(fine - coarse);
    est.converged = est.error_estimate < 1e-3;
    return est;
}

std::vector<Table1Row> table1(long m_from, long m_to, long resolution) {
    require(m_from >= 1 && m_from <= m_to, "need 1 <= m_from <= m_to");
    std::vector<Table1Row> rows;
    for (long m = m_from; m <= m_to; ++m) {
        const double log_lambda = std::log(eigen_data(m).lambda_plus);
        Table1Row row{m, log_lambda, 0, 0.0, false};
        for (long N = 1; N <= 12; ++N) {
            // the survey uses the torus route for every m; see mean_log_norm
            MeanEstimate est = mean_log_norm(m, N, resolution, MeanRoute::Torus);
            if (std::abs(log_lambda - est.value) < 1e-3) {
                // indeterminate at this resolution; refine once
                est = mean_log_norm(m, N, 2 * resolution, MeanRoute::Torus);
            }
            if (est.value < log_lambda) {
                row.n_min = N;
                row.mean = est.value;
                row.determined = true;
                break;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

Mat2c constant_length_fourier(long ell, double k) {
    require(ell >= 1, "ell must be >= 1");
    const cplx z = unit_phase(k);
    return {cplx{1, 0}, geometric_sum(ell + 1, z), z * geometric_sum(ell, z), cplx{0, 0}};
}

LyapunovEstimate constant_length_exponents(long ell, double k, long n) {
    require(ell >= 1, "ell must be >= 1");
    require(n >= 1, "n must be >= 1");
    const long lambda = ell + 1;
    const double log_sqrt_lambda = 0.5 * std::log(double(lambda));

    TorusOrbit orbit(lambda * ell, k);  // m = ell(ell+1) gives the same integer multiplier
    Rescaler acc;
    for (long j = 0; j < n; ++j) {
        acc.right_mul(constant_length_fourier(ell, orbit.y()));
        orbit.advance();
    }
    LyapunovEstimate est;
    est.n = n;
    est.k = k;
    est.chi_b = acc.log_scale / double(n);
    est.chi_max = log_sqrt_lambda + est.chi_b;
    est.chi_min = log_sqrt_lambda - est.chi_b;
    est.chi_min_inverse = std::numeric_limits<double>::quiet_NaN();
    est.inverse_ok = false;
    return est;
}

double constant_length_psi_average(long ell, double k, long n) {
    require(ell >= 1, "ell must be >= 1");
    require(n >= 1, "n must be >= 1");
    TorusOrbit orbit(ell * (ell + 1), k);
    double sum = 0.0;
    for (long j = 0; j < n; ++j) {
        sum += std::log(std::abs(geometric_sum(ell + 1, unit_phase(orbit.y()))));
        orbit.advance();
    }
    return sum / double(n);
}

}  // namespace ifs
