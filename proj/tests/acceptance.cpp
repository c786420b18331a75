// Acceptance suite: one line per criterion, each pinned to its stated
// tolerance.  Exits nonzero when any criterion fails.
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "cocycle.hpp"
#include "fourier.hpp"
#include "mahler.hpp"
#include "paircorr.hpp"
#include "rng.hpp"
#include "substitution.hpp"

using namespace ifs;

namespace {

struct Criterion {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& note) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += note;
        }
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// ---- 1: minimal-N table reproduction, m = 1..20 ----
Criterion criterion_table1() {
    struct Ref {
        long n;
        double log_lambda, mean;
    };
    const Ref ref[20] = {
        {6, 0.481, 0.439}, {4, 0.693, 0.677}, {4, 0.834, 0.770}, {3, 0.941, 0.924},
        {3, 1.027, 0.949}, {3, 1.099, 0.964}, {2, 1.161, 1.144}, {2, 1.216, 1.152},
        {2, 1.265, 1.157}, {2, 1.309, 1.161}, {2, 1.349, 1.164}, {2, 1.386, 1.166},
        {2, 1.421, 1.168}, {2, 1.453, 1.169}, {2, 1.483, 1.170}, {2, 1.511, 1.171},
        {2, 1.538, 1.172}, {1, 1.563, 1.546}, {1, 1.587, 1.547}, {1, 1.609, 1.547}};

    Criterion c;
    const auto rows = table1(1, 20, 2048);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const auto& want = ref[i];
        c.require(row.determined, "m=" + std::to_string(row.m) + " undetermined");
        c.require(std::abs(row.log_lambda - want.log_lambda) < 1e-3,
                  "m=" + std::to_string(row.m) + " log lambda " + fmt(row.log_lambda));
        c.require(row.n_min == want.n,
                  "m=" + std::to_string(row.m) + " N " + std::to_string(row.n_min) + " want " +
                      std::to_string(want.n));
        c.require(std::abs(row.mean - want.mean) < 2e-3,
                  "m=" + std::to_string(row.m) + " mean " + fmt(row.mean) + " want " +
                      fmt(want.mean));
    }
    return c;
}

// ---- 2: crossing of m(q) and log lambda between m = 17 and 18 ----
Criterion criterion_crossing() {
    Criterion c;
    for (const auto& row : figure1_data(1, 30)) {
        const double margin = row.m_q - row.log_lambda;
        if (row.m <= 17)
            c.require(margin > 5e-3, "m=" + std::to_string(row.m) + " margin " + fmt(margin));
        else
            c.require(margin < -5e-3, "m=" + std::to_string(row.m) + " margin " + fmt(margin));
    }
    return c;
}

// ---- 3: Mahler closed forms, bounds, limits, special roots ----
Criterion criterion_mahler() {
    Criterion c;
    const double log3 = std::log(3.0);
    const double log2s3 = std::log(2.0 + std::sqrt(3.0));
    c.require(std::abs(mahler_roots(q_poly(1)).value - log3) < 1e-9, "m(q1) roots");
    c.require(std::abs(mahler_roots(q_poly(2)).value - log2s3) < 1e-9, "m(q2) roots");
    c.require(std::abs(mahler_quadrature(q_poly(1), 16, 1e-8).value - log3) < 1e-6,
              "m(q1) quadrature");
    c.require(std::abs(mahler_quadrature(q_poly(2), 64, 1e-8).value - log2s3) < 1e-6,
              "m(q2) quadrature");

    const double bound46 = 0.5 * std::log(46.0);
    const double bound35 = std::log(3.0 + std::sqrt(5.0));
    for (long m = 1; m <= 60; ++m) {
        const double mq = mahler_roots(q_poly(m)).value;
        c.require(mq < bound46, "bound sqrt46 at m=" + std::to_string(m));
        c.require(mq <= bound35 + 1e-9, "bound 3+sqrt5 at m=" + std::to_string(m));
    }

    const TwoVarLimits lim = two_var_limits();
    c.require(std::abs(lim.limit_q - 1.550675) <= 1e-5, "limit_q " + fmt(lim.limit_q));
    c.require(std::abs(lim.limit_s - 1.615) <= 2e-3, "limit_s " + fmt(lim.limit_s));

    const PerronRootInfo p5 = perron_root_info(5);
    c.require(std::abs(p5.second_modulus - 1.354) <= 1e-3,
              "m=5 second modulus " + fmt(p5.second_modulus));
    for (long m : {3L, 4L}) {
        const PerronRootInfo info = perron_root_info(m);
        const double xi = std::exp(mahler_roots(q_poly(m)).value);
        c.require(std::abs(xi - info.xi) < 1e-8,
                  "exp(m(q)) vs largest root at m=" + std::to_string(m));
    }
    return c;
}

// ---- 4: determinant ergodic average ----
Criterion criterion_det_average() {
    Criterion c;
    const long n = 100000;
    for (long m : {2L, 3L, 5L, 6L, 12L}) {
        SampleRng rng(1000 + std::uint64_t(m));
        int good = 0;
        for (int i = 0; i < 100; ++i) {
            DetAverage avg{};
            // pathological samples (orbit meets Z_m) are resampled
            for (;;) {
                avg = det_average(m, rng.uniform01(), n);
                if (avg.singular_hits == 0) break;
            }
            if (std::abs(avg.value) < 0.05) ++good;
        }
        c.require(good >= 90,
                  "m=" + std::to_string(m) + " only " + std::to_string(good) + "/100 within 0.05");
    }
    SampleRng rng(77);
    for (int i = 0; i < 5; ++i)
        c.require(det_average(1, rng.uniform01(), n).value == 0.0, "m=1 average not exactly 0");
    return c;
}

// ---- 5: sum rule, inverse route, m = 3 singularity margin ----
Criterion criterion_sum_rule() {
    Criterion c;
    const double log_lambda = std::log(eigen_data(3).lambda_plus);
    SampleRng rng(5);
    int agree = 0;
    for (int i = 0; i < 100; ++i) {
        LyapunovEstimate est{};
        for (;;) {
            est = lyapunov_pair(3, rng.uniform01(), 100000);
            if (est.inverse_ok) break;
        }
        c.require(std::abs(est.chi_min + est.chi_max - log_lambda) < 1e-12, "sum rule broken");
        if (std::abs(est.chi_min_inverse - est.chi_min) < 0.02) ++agree;
    }
    c.require(agree >= 90, "inverse-route agreement only " + std::to_string(agree) + "/100");

    SpectralReportConfig config;
    config.cocycle_n = 20000;
    config.k_samples = 4;
    config.resolution = 1024;
    const SpectralReport rep = spectral_report(3, {{1, 0}, {1, 0}}, config);
    c.require(rep.n_criterion == 4, "m=3 minimal N " + std::to_string(rep.n_criterion));
    c.require(rep.chi_min_bound > 0.0, "m=3 chi_min bound not positive");
    c.require(rep.verdict.find("singular") != std::string::npos, "m=3 verdict not singular");
    return c;
}

// ---- 6: Fibonacci exponent against the quoted 0.163 ----
Criterion criterion_fibonacci_exponent() {
    Criterion c;
    SampleRng rng(6);
    double sum = 0.0;
    for (int i = 0; i < 20; ++i) sum += chi_b_estimate(1, rng.uniform01(), 100000);
    const double mean = sum / 20.0;
    c.require(std::abs(mean - 0.163) < 0.02,
              "chi^B mean " + fmt(mean) + " vs 0.163 (the cocycle norms grow subexponentially; "
              "see the N-block means, which bound chi^B below 0.04 already at N = 96)");
    return c;
}

// ---- 7: constant-length corollary ----
Criterion criterion_constant_length() {
    Criterion c;
    for (long ell : {1L, 2L, 3L}) {
        SampleRng rng(700 + std::uint64_t(ell));
        for (int i = 0; i < 5; ++i) {
            const double chi_b = constant_length_exponents(ell, rng.uniform01(), 100000).chi_b;
            c.require(chi_b < 0.02,
                      "ell=" + std::to_string(ell) + " chi^B " + fmt(chi_b) + " at n=1e5");
        }
        SampleRng krng(800 + std::uint64_t(ell));
        for (int i = 0; i < 1000; ++i) {
            const double k = krng.uniform01();
            const Mat2c b = constant_length_fourier(ell, k);
            const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * k);
            cplx psi{1, 0}, zp{1, 0};
            for (long j = 1; j <= ell; ++j) {
                zp *= z;
                psi += zp;
            }
            const bool ok = std::abs(b.a + b.c - psi) < 1e-12 && std::abs(b.b + b.d - psi) < 1e-12;
            c.require(ok, "left eigenvector identity at ell=" + std::to_string(ell));
            if (!ok) break;
        }
    }
    return c;
}

// ---- 8: positivity iteration growth and direction ----
Criterion criterion_positivity() {
    Criterion c;
    for (long m : {2L, 3L}) {
        const double eps = epsilon_estimate(m);
        const double log_lambda = std::log(eigen_data(m).lambda_plus);
        const auto steps = positivity_iteration(m, eps / 2.0, {1, 0, 0, 0}, 50);
        const double growth = (steps[49].log_norm - steps[48].log_norm) / 4.0;
        c.require(std::abs(growth - log_lambda) < 1e-3,
                  "m=" + std::to_string(m) + " growth " + fmt(growth));
        const auto wpf = pf_tensor(m);
        double dist = 0.0;
        for (int i = 0; i < 4; ++i)
            dist += std::abs(steps[49].direction[std::size_t(i)] - wpf[std::size_t(i)]);
        c.require(dist < 1e-8, "m=" + std::to_string(m) + " direction distance " + fmt(dist));
        for (const auto& st : steps)
            for (double v : st.direction)
                if (!(v > 0.0)) c.require(false, "non-positive iterate");
    }
    return c;
}

// ---- 9: renormalization relations ----
Criterion criterion_renormalization() {
    Criterion c;
    for (long m : {1L, 2L, 3L}) {
        const PairCorrelationTable base(m, 10000.0, 130.0);
        const double res = renormalization_residual(base, m, 100.0);
        c.require(res < 5e-3, "m=" + std::to_string(m) + " residual " + fmt(res) + " at R=1e4");

        const PairCorrelationTable wide(m, 40000.0, 130.0);
        const double res4 = renormalization_residual(wide, m, 100.0);
        const double noise = 2.0 / double(base.card());
        c.require(res4 <= 0.5 * res + noise,
                  "m=" + std::to_string(m) + " residual did not halve: " + fmt(res) + " -> " +
                      fmt(res4));
    }
    return c;
}

// ---- 10: intensities and periodogram scaling ----
Criterion criterion_intensities() {
    Criterion c;
    for (long m : {1L, 2L, 3L, 7L})
        c.require(std::abs(bragg_intensity_zero(m, {{1, 0}, {1, 0}}) - 1.0) < 1e-15,
                  "I0 at u=(1,1), m=" + std::to_string(m));

    for (long m = 1; m <= 30; ++m) {
        const auto v = intensity_vector_zero(m);
        const Mat4d a0 = a_u_eval(m, 0.0).matrix;
        const auto image = a0 * v;
        const double l2 = eigen_data(m).lambda_plus * eigen_data(m).lambda_plus;
        double resid = 0.0;
        for (int i = 0; i < 4; ++i)
            resid = std::max(resid, std::abs(image[std::size_t(i)] / l2 - v[std::size_t(i)]));
        c.require(resid < 1e-12, "eigen relation residual " + fmt(resid) + " at m=" +
                                     std::to_string(m));
    }

    // five dyadic radii: window-count fluctuations scale like R^0.79 for
    // m = 12, so three radii from R = 1000 wobble the fit noticeably
    for (long m : {1L, 2L, 3L, 6L, 12L}) {
        const double expo = periodogram_exponent(m, {{1, 0}, {1, 0}}, 0.0, 1000.0, 5);
        c.require(std::abs(expo - 2.0) < 0.1,
                  "k=0 exponent " + fmt(expo) + " at m=" + std::to_string(m));
    }
    SampleRng rng(10);
    for (int i = 0; i < 5; ++i) {
        const double k = 0.05 + 0.9 * rng.uniform01();
        const double expo = periodogram_exponent(3, {{1, 0}, {1, 0}}, k, 1000.0, 5);
        c.require(expo < 1.7, "m=3 exponent " + fmt(expo) + " at k=" + fmt(k));
    }
    return c;
}

// ---- 11: local recoding between the two fixed points ----
Criterion criterion_recode() {
    Criterion c;
    for (long ell : {1L, 2L}) {
        const long m = ell * (ell + 1);
        const Word tilde = tilde_fixed_point(ell, 24000 / (ell + 1));
        const Word binary = recode_to_binary(tilde, ell);
        const Word direct = fixed_point(m, 2 * binary.size());
        const std::int64_t span = 5000;
        const bool ok =
            binary.origin >= span && binary.size() - binary.origin >= span &&
            binary.letters.substr(std::size_t(binary.origin - span), std::size_t(2 * span)) ==
                direct.letters.substr(std::size_t(direct.origin - span), std::size_t(2 * span));
        c.require(ok, "ell=" + std::to_string(ell) + " recoded window mismatch");
    }
    return c;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        std::function<Criterion()> run;
    };
    const std::vector<Entry> entries = {
        {"1 table-1 reproduction (m=1..20)", criterion_table1},
        {"2 figure-1 crossing at m=17/18", criterion_crossing},
        {"3 Mahler closed forms, bounds, limits", criterion_mahler},
        {"4 determinant ergodic average", criterion_det_average},
        {"5 sum rule + inverse route + m=3 margin", criterion_sum_rule},
        {"6 Fibonacci exponent vs 0.163", criterion_fibonacci_exponent},
        {"7 constant-length corollary", criterion_constant_length},
        {"8 positivity iteration", criterion_positivity},
        {"9 renormalization relations", criterion_renormalization},
        {"10 intensities + periodogram scaling", criterion_intensities},
        {"11 MLD recoding of fixed points", criterion_recode},
    };

    int failures = 0;
    for (const auto& entry : entries) {
        const Criterion result = entry.run();
        if (result.pass) {
            std::printf("PASS  criterion %s\n", entry.name);
        } else {
            ++failures;
            std::printf("FAIL  criterion %s: %s\n", entry.name, result.detail.c_str());
        }
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
