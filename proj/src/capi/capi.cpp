#include "inflation_spectra.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "cocycle.hpp"
#include "mahler.hpp"
#include "paircorr.hpp"
#include "rng.hpp"
#include "substitution.hpp"

struct ifs_word {
    ifs::Word word;
};

struct ifs_paircorr {
    ifs::PairCorrelationTable table;
};

namespace {

template <typename Fn>
ifs_status guarded(Fn&& fn) {
    try {
        fn();
        return IFS_OK;
    } catch (const std::invalid_argument&) {
        return IFS_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        return IFS_ERR_INTERNAL;
    } catch (const std::runtime_error&) {
        return IFS_ERR_NO_CONVERGENCE;
    } catch (...) {
        return IFS_ERR_INTERNAL;
    }
}

ifs_status copy_string(const std::string& s, char* buf, size_t cap) {
    if (buf == nullptr) return IFS_ERR_NULL_POINTER;
    if (cap < s.size() + 1) return IFS_ERR_BUFFER_TOO_SMALL;
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return IFS_OK;
}

}  // namespace

extern "C" {

const char* ifs_status_message(ifs_status status) {
    switch (status) {
        case IFS_OK: return "ok";
        case IFS_ERR_INVALID_ARGUMENT: return "invalid argument";
        case IFS_ERR_ILLEGAL_WORD: return "illegal word";
        case IFS_ERR_NO_CONVERGENCE: return "numeric non-convergence";
        case IFS_ERR_NULL_POINTER: return "null pointer";
        case IFS_ERR_BUFFER_TOO_SMALL: return "buffer too small";
        case IFS_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

ifs_status ifs_classify(int64_t m, int* cls, int64_t* ell) {
    if (cls == nullptr || ell == nullptr) return IFS_ERR_NULL_POINTER;
    return guarded([&] {
        const ifs::SpectralClass c = ifs::classify(m);
        switch (c.tag) {
            case ifs::SpectralTag::Fibonacci: *cls = IFS_CLASS_FIBONACCI; break;
            case ifs::SpectralTag::IntegerMultiplier: *cls = IFS_CLASS_INTEGER_MULTIPLIER; break;
            case ifs::SpectralTag::NonPV: *cls = IFS_CLASS_NON_PV; break;
        }
        *ell = c.ell;
    });
}

ifs_status ifs_eigen(int64_t m, ifs_eigen_data* out) {
    if (out == nullptr) return IFS_ERR_NULL_POINTER;
    return guarded([&] {
        const ifs::EigenData d = ifs::eigen_data(m);
        *out = {d.lambda_plus, d.lambda_minus, d.freq[0], d.freq[1], d.length[0], d.length[1]};
    });
}

ifs_status ifs_subst_matrix(int64_t m, int64_t out[4]) {
    if (out == nullptr) return IFS_ERR_NULL_POINTER;
    return guarded([&] {
        const ifs::SubstMatrix mat = ifs::subst_matrix(m);
        out[0] = mat.e[0][0];
        out[1] = mat.e[0][1];
        out[2] = mat.e[1][0];
        out[3] = mat.e[1][1];
    });
}

ifs_status ifs_fixed_point(int64_t m, int64_t n_letters, ifs_word** out) {
    if (out == nullptr) return IFS_ERR_NULL_POINTER;
    *out = nullptr;
    return guarded([&] { *out = new ifs_word{ifs::fixed_point(m, n_letters)}; });
}

void ifs_word_free(ifs_word* word) { delete word; }

int64_t ifs_word_length(const ifs_word* word) { return word == nullptr ? 0 : word->word.size(); }

int64_t ifs_word_origin(const ifs_word* word) { return word == nullptr ? 0 : word->word.origin; }

ifs_status ifs_word_letters(const ifs_word* word, char* buf, size_t cap) {
    if (word == nullptr) return IFS_ERR_NULL_POINTER;
    return copy_string(word->word.letters, buf, cap);
}

ifs_status ifs_chi_b(int64_t m, double k, int64_t n, double* out) {
    if (out == nullptr) return IFS_ERR_NULL_POINTER;
    return guarded([&] { *out = ifs::chi_b_estimate(m, k, n); });
}

ifs_status ifs_lyapunov_scan(int64_t m, int64_t n, int samples, uint64_t seed,
                             ifs_lyapunov_row* rows) {
    if (rows == nullptr) return IFS_ERR_NULL_POINTER;
    if (samples < 1) return IFS_ERR_INVALID_ARGUMENT;
    return guarded([&] {
        ifs::SampleRng rng(seed);
        for (int i = 0; i < samples; ++i) {
            // pathological samples (orbit meets Z_m) are resampled, which the
            // a.e. statements permit
            ifs::LyapunovEstimate est{};
            for (;;) {
                est = ifs::lyapunov_pair(m, rng.uniform01(), n);
                if (est.inverse_ok) break;
            }
            rows[i] = {est.k,       est.chi_b,           est.chi_min,
                       est.chi_max, est.chi_min_inverse, est.inverse_ok ? 1 : 0};
        }
    });
}

ifs_status ifs_det_average(int64_t m, double k, int64_t n, double* value,
                           int64_t* singular_hits) {
    if (value == nullptr || singular_hits == nullptr) return IFS_ERR_NULL_POINTER;
    return guarded([&] {
        const ifs::DetAverage avg = ifs::det_average(m, k, n);
        *value = avg.value;
        *singular_hits = avg.singular_hits;
    });
}

ifs_status ifs_mean_log_norm(int64_t m, int64_t n_steps, int64_t resolution, int route,
                             double* value, double* error_estimate) {
    if (value == nullptr || error_estimate == nullptr) return IFS_ERR_NULL_POINTER;
    ifs::MeanRoute r = ifs::MeanRoute::Auto;
    if (route == IFS_MEAN_LINE) r = ifs::MeanRoute::Line;
    if (route == IFS_MEAN_TORUS) r = ifs::MeanRoute::Torus;
    const ifs_status st = guarded([&] {
        const ifs::MeanEstimate est = ifs::mean_log_norm(m, n_steps, resolution, r);
        *value = est.value;
        *error_estimate = est.error_estimate;
        if (!est.converged) throw std::runtime_error("error target not reached");
    });
    return st;
}

ifs_status ifs_table1(int64_t m_from, int64_t m_to, int64_t resolution, ifs_table1_row* rows) {
    if (rows == nullptr) return IFS_ERR_NULL_POINTER;
    return guarded([&] {
        const auto out = ifs::table1(m_from, m_to, resolution);
        for (std::size_t i = 0; i < out.size(); ++i)
            rows[i] = {out[i].m, out[i].log_lambda, out[i].n_min, out[i].mean,
                       out[i].determined ? 1 : 0};
    });
}

ifs_status ifs_mahler(int family, int64_t index, double quadrature_tol, ifs_mahler_row* row) {
    if (row == nullptr) return IFS_ERR_NULL_POINTER;
    return guarded([&] {
        ifs::IntPolynomial p;
        switch (family) {
            case IFS_POLY_Q: p = ifs::q_poly(index); break;
            case IFS_POLY_R: p = ifs::r_poly(index); break;
            case IFS_POLY_S: p = ifs::s_poly(index); break;
            default: throw std::invalid_argument("unknown polynomial family");
        }
        const double tol = quadrature_tol > 0.0 ? quadrature_tol : 1e-8;
        const ifs::MahlerResult roots = ifs::mahler_roots(p);
        const ifs::MahlerResult quad = ifs::mahler_quadrature(p, 1024, tol);
        *row = {index, roots.value, roots.error_estimate, quad.value, quad.error_estimate};
    });
}

ifs_status ifs_figure1(int64_t m_from, int64_t m_to, ifs_figure1_row* rows) {
    if (rows == nullptr) return IFS_ERR_NULL_POINTER;
    return guarded([&] {
        const auto out = ifs::figure1_data(m_from, m_to);
        for (std::size_t i = 0; i < out.size(); ++i)
            rows[i] = {out[i].m, out[i].log_lambda, out[i].m_q};
    });
}

ifs_status ifs_paircorr_build(int64_t m, double radius, double z_max, ifs_paircorr** out) {
    if (out == nullptr) return IFS_ERR_NULL_POINTER;
    *out = nullptr;
    return guarded(
        [&] { *out = new ifs_paircorr{ifs::PairCorrelationTable(m, radius, z_max)}; });
}

void ifs_paircorr_free(ifs_paircorr* table) { delete table; }

int64_t ifs_paircorr_size(const ifs_paircorr* table) {
    return table == nullptr ? 0 : int64_t(table->table.entries().size());
}

int64_t ifs_paircorr_card(const ifs_paircorr* table) {
    return table == nullptr ? 0 : table->table.card();
}

ifs_status ifs_paircorr_entries(const ifs_paircorr* table, ifs_paircorr_entry* buf,
                                int64_t cap) {
    if (table == nullptr || buf == nullptr) return IFS_ERR_NULL_POINTER;
    if (cap < int64_t(table->table.entries().size())) return IFS_ERR_BUFFER_TOO_SMALL;
    const ifs::ModuleRing ring(table->table.m());
    int64_t idx = 0;
    for (const auto& [key, value] : table->table.entries()) {
        buf[idx++] = {key.i, key.j, key.z.a, key.z.b, ring.embed(key.z), value};
    }
    return IFS_OK;
}

ifs_status ifs_paircorr_residual(const ifs_paircorr* table, double interior_radius,
                                 double* out) {
    if (table == nullptr || out == nullptr) return IFS_ERR_NULL_POINTER;
    return guarded([&] {
        *out = ifs::renormalization_residual(table->table, table->table.m(), interior_radius);
    });
}

ifs_status ifs_spectral_report(int64_t m, double u0_re, double u0_im, double u1_re,
                               double u1_im, int64_t cocycle_n, int k_samples, uint64_t seed,
                               char* buf, size_t cap) {
    if (buf == nullptr) return IFS_ERR_NULL_POINTER;
    std::string text;
    const ifs_status st = guarded([&] {
        ifs::SpectralReportConfig config;
        if (cocycle_n > 0) config.cocycle_n = cocycle_n;
        if (k_samples > 0) config.k_samples = k_samples;
        config.seed = seed;
        const ifs::SpectralReport rep =
            ifs::spectral_report(m, {{u0_re, u0_im}, {u1_re, u1_im}}, config);
        text = rep.render();
    });
    if (st != IFS_OK) return st;
    return copy_string(text, buf, cap);
}

}  // extern "C"
