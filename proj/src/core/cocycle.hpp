#pragma once

#include <cstdint>
#include <vector>

#include "linalg.hpp"

namespace ifs {

// Log-rescaled running product B^{(n)}(k) = B(k) B(lambda k) ... B(lambda^{n-1} k).
// The true product is e^{log_scale} * matrix with ||matrix||_F = 1, so
// log_scale is exactly log ||B^{(n)}(k)||_F.
struct CocycleAccumulator {
    Mat2c matrix;
    double log_scale = 0.0;
    long n = 0;
    double k0 = 0.0;
};

CocycleAccumulator cocycle_product(long m, double k, long n);

// chi^B estimate (1/n) log ||B^{(n)}(k)||_F.
double chi_b_estimate(long m, double k, long n);

struct LyapunovEstimate {
    double chi_b;
    double chi_min;  // log sqrt(lambda) - chi_b
    double chi_max;  // log sqrt(lambda) + chi_b
    long n;
    double k;
    // independent chi_min estimate through the inverse cocycle
    // B^{-1}(lambda^{n-1} k) ... B^{-1}(k); invalid when the orbit passes
    // within tolerance of the zero set Z_m (resample k in that case)
    double chi_min_inverse;
    bool inverse_ok;
};

LyapunovEstimate lyapunov_pair(long m, double k, long n);

// (1/n) sum_{j<n} log |det B(lambda^j k)|, which tends to 0 for a.e. k.
// Terms with |det| < 1e-300 are counted as singular hits and skipped; any
// hit marks the sample as pathological (the mathematical average is -inf)
// and callers should resample.
struct DetAverage {
    double value;
    long singular_hits;
};

DetAverage det_average(long m, double k, long n);

enum class MeanRoute {
    Auto,   // Line when lambda is an integer, Torus otherwise
    Line,   // (1/N) int_0^1 log ||B^{(N)}(k)||_F^2 dk       (lambda integer only)
    Torus,  // (1/N) int_{T^2} log ||B~^{(N)}(x,y)||_F^2 dx dy
};

// Mean of log ||B^{(N)}||_F^2 per cocycle step, by midpoint quadrature with
// one grid refinement for the error estimate.  For integer lambda the
// section line (lambda k, k) closes up on the torus, so the two routes are
// different quantities; the reference table of the m <= 20 survey matches
// the Torus values throughout, which is what table1() uses.
struct MeanEstimate {
    long N;
    double value;
    long grid_resolution;
    double error_estimate;
    bool converged;  // error_estimate < 1e-3
};

MeanEstimate mean_log_norm(long m, long N, long resolution, MeanRoute route = MeanRoute::Auto);

struct Table1Row {
    long m;
    double log_lambda;
    long n_min;   // minimal N with mean < log lambda
    double mean;  // mean at n_min
    bool determined;
};

// Minimal-N survey over a range of m: N runs from 1 to 12; comparisons
// within 1e-3 of the threshold double the resolution once before deciding.
std::vector<Table1Row> table1(long m_from, long m_to, long resolution = 2048);

// Constant-length variant a -> a b^ell, b -> a^{ell+1} (lambda = ell+1):
// B(k) = [[1, psi_ell(z)], [z psi_{ell-1}(z), 0]], z = e^{2 pi i k}.
Mat2c constant_length_fourier(long ell, double k);

LyapunovEstimate constant_length_exponents(long ell, double k, long n);

// Birkhoff average (1/n) sum log |psi_ell(z_j)| along the orbit; tends to
// the (vanishing) logarithmic Mahler measure of psi_ell.
double constant_length_psi_average(long ell, double k, long n);

}  // namespace ifs
