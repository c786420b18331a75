#include "paircorr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cocycle.hpp"
#include "fourier.hpp"
#include "rng.hpp"

namespace ifs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct PatchPoint {
    double x;
    AlgebraicPoint pos;
    int type;
};

// left-endpoint set of a central fixed-point patch spanning at least
// [-span, span]
std::vector<PatchPoint> patch_points(long m, double span) {
    const ModuleRing ring(m);
    // tiles have length >= 1, so 2*span + slack letters always suffice; grow
    // geometrically from a cheap estimate instead of over-allocating
    std::int64_t letters = std::int64_t(2.2 * span) + 64;
    for (;;) {
        const Word w = fixed_point(m, letters);
        const Patch patch = geometric_patch(w, m);
        const double left = ring.embed(patch.tiles.front().left);
        const double right = ring.embed(patch.tiles.back().left);
        if (left <= -span && right >= span) {
            std::vector<PatchPoint> pts;
            pts.reserve(patch.tiles.size());
            for (const Tile& t : patch.tiles)
                pts.push_back({ring.embed(t.left), t.left, t.type == '0' ? 0 : 1});
            return pts;
        }
        letters *= 2;
    }
}

}  // namespace

PairCorrelationTable::PairCorrelationTable(long m, double radius, double z_max)
    : m_(m), radius_(radius), z_max_(z_max), card_(0) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (radius < 8.0) throw std::invalid_argument("radius too small for a two-tile window");

    const std::vector<PatchPoint> pts = patch_points(m, radius + z_max + 4.0);

    std::size_t lo = 0, hi = pts.size();
    while (lo < hi && pts[lo].x < -radius) ++lo;
    while (hi > lo && pts[hi - 1].x > radius) --hi;
    card_ = std::int64_t(hi - lo);
    if (card_ < 4) throw std::invalid_argument("window contains too few tiles");

    std::map<Key, std::int64_t> counts;
    for (std::size_t a = lo; a < hi; ++a) {
        // partners to the right within z_max; mirror pairs fill in z < 0
        for (std::size_t b = a; b < hi; ++b) {
            const double dz = pts[b].x - pts[a].x;
            if (dz > z_max_) break;
            const AlgebraicPoint z = pts[b].pos - pts[a].pos;
            ++counts[{pts[a].type, pts[b].type, z}];
            if (b != a) ++counts[{pts[b].type, pts[a].type, -z}];
        }
    }
    for (const auto& [key, n] : counts) entries_[key] = double(n) / double(card_);
}

double PairCorrelationTable::value(int i, int j, AlgebraicPoint z) const {
    const auto it = entries_.find({i, j, z});
    return it == entries_.end() ? 0.0 : it->second;
}

PairCorrelationTable empirical_pair_correlations(long m, double radius, double z_max) {
    return PairCorrelationTable(m, radius, z_max);
}

double renormalization_residual(const PairCorrelationTable& table, long m,
                                double interior_radius) {
    const ModuleRing ring(m);
    const DisplacementMatrix t = displacement_matrix(m);
    const double max_t = ring.embed(t.at(1, 0).back());
    if (interior_radius > table.radius() / ring.lambda() - max_t)
        throw std::invalid_argument("interior radius too large for this window");
    if (interior_radius > table.z_max() ||
        interior_radius + max_t > table.z_max() * ring.lambda())
        throw std::invalid_argument("tabulated z_max too small for this interior");

    // candidate displacements: tabulated z in the interior, plus images
    // lambda*z' - r + s of tabulated z', so one-sided support mismatches of
    // the relation are caught as well
    std::vector<PairCorrelationTable::Key> candidates;
    for (const auto& [key, v] : table.entries()) {
        if (std::abs(ring.embed(key.z)) <= interior_radius) candidates.push_back(key);
    }
    for (const auto& [key, v] : table.entries()) {
        const AlgebraicPoint lz = ring.mul_lambda(key.z);
        for (int i = 0; i < 2; ++i) {
            for (const AlgebraicPoint& r : t.at(i, key.i)) {
                for (int j = 0; j < 2; ++j) {
                    for (const AlgebraicPoint& s : t.at(j, key.j)) {
                        const AlgebraicPoint z = ring.normalize(lz - r + s);
                        if (std::abs(ring.embed(z)) <= interior_radius)
                            candidates.push_back({i, j, z});
                    }
                }
            }
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    double worst = 0.0;
    for (const auto& key : candidates) {
        double rhs = 0.0;
        for (int kk = 0; kk < 2; ++kk) {
            for (const AlgebraicPoint& r : t.at(key.i, kk)) {
                for (int ll = 0; ll < 2; ++ll) {
                    for (const AlgebraicPoint& s : t.at(key.j, ll)) {
                        const auto arg = ring.div_lambda(ring.normalize(key.z + r - s));
                        if (arg) rhs += table.value(kk, ll, *arg);
                    }
                }
            }
        }
        rhs /= ring.lambda();
        worst = std::max(worst, std::abs(table.value(key.i, key.j, key.z) - rhs));
    }
    return worst;
}

double bragg_intensity_zero(long m, WeightVector u) {
    const EigenData d = eigen_data(m);
    return std::norm(d.freq[0] * u.u0 + d.freq[1] * u.u1);
}

std::array<double, 4> intensity_vector_zero(long m) {
    const EigenData d = eigen_data(m);
    return {d.freq[0] * d.freq[0], d.freq[0] * d.freq[1], d.freq[1] * d.freq[0],
            d.freq[1] * d.freq[1]};
}

std::vector<PeriodogramSample> periodogram(long m, WeightVector u, double radius,
                                           std::span<const double> k_list) {
    if (radius <= 0.0) throw std::invalid_argument("radius must be positive");
    const std::vector<PatchPoint> pts = patch_points(m, radius + 2.0);
    std::vector<PeriodogramSample> out;
    out.reserve(k_list.size());
    for (double k : k_list) {
        std::complex<double> sum{0, 0};
        for (const PatchPoint& p : pts) {
            if (p.x < -radius || p.x > radius) continue;
            const double phase = -kTwoPi * k * p.x;
            sum += (p.type == 0 ? u.u0 : u.u1) *
                   std::complex<double>{std::cos(phase), std::sin(phase)};
        }
        out.push_back({k, std::norm(sum) / (2.0 * radius), radius});
    }
    return out;
}

double periodogram_exponent(long m, WeightVector u, double k, double radius0, int n_radii) {
    if (n_radii < 2) throw std::invalid_argument("need at least two radii");
    std::vector<double> lx, ly;
    double radius = radius0;
    for (int i = 0; i < n_radii; ++i, radius *= 2.0) {
        const double ks[1] = {k};
        const auto sample = periodogram(m, u, radius, ks);
        lx.push_back(std::log(radius));
        ly.push_back(std::log(std::max(sample[0].intensity * 2.0 * radius, 1e-300)));
    }
    // least squares slope
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= double(lx.size());
    my /= double(ly.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    return num / den;
}

std::string SpectralReport::render() const {
    std::ostringstream os;
    os.precision(6);
    os << std::fixed;
    os << "m=" << m << "  lambda=" << lambda << "  log lambda=" << std::log(lambda) << "\n";
    os << "class: ";
    switch (cls.tag) {
        case SpectralTag::Fibonacci: os << "Fibonacci"; break;
        case SpectralTag::IntegerMultiplier: os << "IntegerMultiplier ell=" << cls.ell; break;
        case SpectralTag::NonPV: os << "NonPV"; break;
    }
    os << "\n";
    os << "I0 = " << intensity0 << "  (trivial Bragg peak at k=0)\n";
    os << "norm criterion: N=" << n_criterion << "  mean=" << mean_at_n
       << "  chi_min lower bound=" << chi_min_bound << "\n";
    os << "sampled cocycle: chi^B mean=" << chi_b_mean << "  min chi_min=" << chi_min_sampled
       << "\n";
    os << "verdict: " << verdict << "\n";
    return os.str();
}

SpectralReport spectral_report(long m, WeightVector u, const SpectralReportConfig& config) {
    if (std::norm(u.u0) == 0.0 || std::norm(u.u1) == 0.0)
        throw std::invalid_argument("weights must satisfy u0 u1 != 0");

    SpectralReport rep;
    rep.m = m;
    rep.cls = classify(m);
    rep.lambda = eigen_data(m).lambda_plus;
    rep.intensity0 = bragg_intensity_zero(m, u);

    const double log_lambda = std::log(rep.lambda);
    rep.n_criterion = 0;
    rep.mean_at_n = 0.0;
    for (long n = 1; n <= config.max_n_search; ++n) {
        const MeanEstimate est = mean_log_norm(m, n, config.resolution, MeanRoute::Torus);
        if (est.value < log_lambda) {
            rep.n_criterion = n;
            rep.mean_at_n = est.value;
            break;
        }
    }
    rep.chi_min_bound = rep.n_criterion > 0 ? 0.5 * (log_lambda - rep.mean_at_n) : 0.0;

    SampleRng rng(config.seed);
    double chi_b_sum = 0.0;
    double chi_min_low = std::numeric_limits<double>::infinity();
    for (int i = 0; i < config.k_samples; ++i) {
        const LyapunovEstimate est = lyapunov_pair(m, rng.uniform01(), config.cocycle_n);
        chi_b_sum += est.chi_b;
        chi_min_low = std::min(chi_min_low, est.chi_min);
    }
    rep.chi_b_mean = chi_b_sum / double(config.k_samples);
    rep.chi_min_sampled = chi_min_low;

    switch (rep.cls.tag) {
        case SpectralTag::Fibonacci:
            rep.verdict = "pure point (Fibonacci)";
            break;
        case SpectralTag::IntegerMultiplier: {
            std::ostringstream os;
            os << "pure point (integer multiplier, ell=" << rep.cls.ell << ")";
            rep.verdict = os.str();
            break;
        }
        case SpectralTag::NonPV:
            rep.verdict =
                "singular: trivial Bragg peak at 0, remainder purely singular continuous";
            break;
    }
    return rep;
}

}  // namespace ifs
