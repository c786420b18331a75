#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "algebraic.hpp"
#include "substitution.hpp"

namespace ifs {

// Empirical pair correlation coefficients of the left-endpoint set of a
// central fixed-point patch: nu_ij(z) counts ordered pairs (type i at x,
// type j at x+z) with both endpoints in [-R, R], divided by the number of
// points in the window.  Displacements are exact elements of Z[lambda];
// only |z| <= z_max is tabulated.
class PairCorrelationTable {
  public:
    struct Key {
        int i, j;
        AlgebraicPoint z;
        friend auto operator<=>(const Key&, const Key&) = default;
    };

    PairCorrelationTable(long m, double radius, double z_max);

    long m() const { return m_; }
    double radius() const { return radius_; }
    double z_max() const { return z_max_; }
    std::int64_t card() const { return card_; }
    double value(int i, int j, AlgebraicPoint z) const;
    const std::map<Key, double>& entries() const { return entries_; }

  private:
    long m_;
    double radius_;
    double z_max_;
    std::int64_t card_;
    std::map<Key, double> entries_;
};

PairCorrelationTable empirical_pair_correlations(long m, double radius, double z_max = 130.0);

// Worst deviation, over displacements in the interior, between nu_ij(z) and
// (1/lambda) sum_{k,l} sum_{r in T_ik} sum_{s in T_jl} nu_kl((z+r-s)/lambda),
// with arguments outside Z[lambda] contributing zero.
double renormalization_residual(const PairCorrelationTable& table, long m,
                                double interior_radius);

struct WeightVector {
    std::complex<double> u0, u1;
};

// Intensity of the trivial Bragg peak at 0: |nu0 u0 + nu1 u1|^2.
double bragg_intensity_zero(long m, WeightVector u);

// I(0) = (nu_i nu_j), the eigenvector of A(0)/lambda^2 at the origin.
std::array<double, 4> intensity_vector_zero(long m);

struct PeriodogramSample {
    double k;
    double intensity;  // |sum u_x e^{-2 pi i k x}|^2 / (2R)
    double radius;
};

std::vector<PeriodogramSample> periodogram(long m, WeightVector u, double radius,
                                           std::span<const double> k_list);

// Least-squares slope of log |sum|^2 against log R over dyadic radii
// R0, 2R0, 4R0, ...; ~2 at a Bragg position, noticeably smaller on the
// continuous part.  A classification heuristic, not a proof device.
double periodogram_exponent(long m, WeightVector u, double k, double radius0, int n_radii = 3);

struct SpectralReportConfig {
    long cocycle_n = 100000;
    int k_samples = 8;
    std::uint64_t seed = 1;
    long resolution = 512;
    long max_n_search = 12;
};

struct SpectralReport {
    long m;
    SpectralClass cls;
    double lambda;
    double intensity0;
    long n_criterion;        // minimal N with mean < log lambda
    double mean_at_n;        // torus mean at that N
    double chi_min_bound;    // (log lambda - mean)/2 from the N-block bound
    double chi_min_sampled;  // smallest sampled chi_min estimate
    double chi_b_mean;       // mean sampled chi^B
    std::string verdict;

    std::string render() const;
};

SpectralReport spectral_report(long m, WeightVector u, const SpectralReportConfig& config = {});

}  // namespace ifs
