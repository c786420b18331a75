/*
 * C interface to the inflation-spectra library: spectral analysis of the
 * binary inflation family 0 -> 0 1^m, 1 -> 0 with tiles of natural length.
 *
 * All functions return an ifs_status; results are written through out
 * parameters.  Opaque handles (ifs_word, ifs_paircorr) are created by the
 * library and released with the matching _free function.
 *
 * Every entry point is a pure function of its arguments; handles are
 * immutable once built. Concurrent calls are safe, including reads of a
 * shared handle.
 */
#ifndef INFLATION_SPECTRA_H
#define INFLATION_SPECTRA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define IFS_API __declspec(dllexport)
#else
#define IFS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ifs_status {
    IFS_OK = 0,
    IFS_ERR_INVALID_ARGUMENT = 1,
    IFS_ERR_ILLEGAL_WORD = 2,
    IFS_ERR_NO_CONVERGENCE = 3,
    IFS_ERR_NULL_POINTER = 4,
    IFS_ERR_BUFFER_TOO_SMALL = 5,
    IFS_ERR_INTERNAL = 6
} ifs_status;

IFS_API const char* ifs_status_message(ifs_status status);

/* ---- substitution ---- */

typedef enum ifs_spectral_class {
    IFS_CLASS_FIBONACCI = 0,
    IFS_CLASS_INTEGER_MULTIPLIER = 1,
    IFS_CLASS_NON_PV = 2
} ifs_spectral_class;

/* class tag plus, for integer multipliers, the ell with m = ell(ell+1) */
IFS_API ifs_status ifs_classify(int64_t m, int* cls, int64_t* ell);

typedef struct ifs_eigen_data {
    double lambda_plus;
    double lambda_minus;
    double freq0, freq1;     /* letter frequencies (PF eigenvector) */
    double length0, length1; /* tile lengths (lambda, 1) */
} ifs_eigen_data;

IFS_API ifs_status ifs_eigen(int64_t m, ifs_eigen_data* out);

/* row-major [[1,1],[m,0]] */
IFS_API ifs_status ifs_subst_matrix(int64_t m, int64_t out[4]);

typedef struct ifs_word ifs_word;

/* central window of the bi-infinite fixed point of rho_m^2, seed 0|0 */
IFS_API ifs_status ifs_fixed_point(int64_t m, int64_t n_letters, ifs_word** out);
IFS_API void ifs_word_free(ifs_word* word);
IFS_API int64_t ifs_word_length(const ifs_word* word);
IFS_API int64_t ifs_word_origin(const ifs_word* word);
/* copies the letters as a NUL-terminated string; needs length+1 capacity */
IFS_API ifs_status ifs_word_letters(const ifs_word* word, char* buf, size_t cap);

/* ---- cocycle / Lyapunov ---- */

IFS_API ifs_status ifs_chi_b(int64_t m, double k, int64_t n, double* out);

typedef struct ifs_lyapunov_row {
    double k;
    double chi_b;
    double chi_min;
    double chi_max;
    double chi_min_inverse; /* NaN when inverse_ok == 0 */
    int inverse_ok;
} ifs_lyapunov_row;

/* seeded uniform k samples on (0,1); rows must hold `samples` entries */
IFS_API ifs_status ifs_lyapunov_scan(int64_t m, int64_t n, int samples, uint64_t seed,
                                     ifs_lyapunov_row* rows);

IFS_API ifs_status ifs_det_average(int64_t m, double k, int64_t n, double* value,
                                   int64_t* singular_hits);

typedef enum ifs_mean_route {
    IFS_MEAN_AUTO = 0,
    IFS_MEAN_LINE = 1,
    IFS_MEAN_TORUS = 2
} ifs_mean_route;

IFS_API ifs_status ifs_mean_log_norm(int64_t m, int64_t n_steps, int64_t resolution, int route,
                                     double* value, double* error_estimate);

typedef struct ifs_table1_row {
    int64_t m;
    double log_lambda;
    int64_t n_min;
    double mean;
    int determined;
} ifs_table1_row;

/* rows must hold m_to - m_from + 1 entries */
IFS_API ifs_status ifs_table1(int64_t m_from, int64_t m_to, int64_t resolution,
                              ifs_table1_row* rows);

/* ---- Mahler measures ---- */

typedef struct ifs_mahler_row {
    int64_t index; /* m for families q and r, ell for family s */
    double value_roots;
    double error_roots;
    double value_quadrature;
    double error_quadrature;
} ifs_mahler_row;

typedef enum ifs_poly_family { IFS_POLY_Q = 0, IFS_POLY_R = 1, IFS_POLY_S = 2 } ifs_poly_family;

/* quadrature_tol <= 0 selects the default 1e-8 */
IFS_API ifs_status ifs_mahler(int family, int64_t index, double quadrature_tol,
                              ifs_mahler_row* row);

typedef struct ifs_figure1_row {
    int64_t m;
    double log_lambda;
    double m_q;
} ifs_figure1_row;

IFS_API ifs_status ifs_figure1(int64_t m_from, int64_t m_to, ifs_figure1_row* rows);

/* ---- pair correlations ---- */

typedef struct ifs_paircorr ifs_paircorr;

typedef struct ifs_paircorr_entry {
    int i, j;
    int64_t za, zb; /* displacement za + zb*lambda */
    double z;       /* real embedding */
    double value;
} ifs_paircorr_entry;

IFS_API ifs_status ifs_paircorr_build(int64_t m, double radius, double z_max,
                                      ifs_paircorr** out);
IFS_API void ifs_paircorr_free(ifs_paircorr* table);
IFS_API int64_t ifs_paircorr_size(const ifs_paircorr* table);
IFS_API int64_t ifs_paircorr_card(const ifs_paircorr* table);
IFS_API ifs_status ifs_paircorr_entries(const ifs_paircorr* table, ifs_paircorr_entry* buf,
                                        int64_t cap);
IFS_API ifs_status ifs_paircorr_residual(const ifs_paircorr* table, double interior_radius,
                                         double* out);

/* ---- diffraction report ---- */

/* renders a plain-text spectral report into buf; requires u0*u1 != 0 */
IFS_API ifs_status ifs_spectral_report(int64_t m, double u0_re, double u0_im, double u1_re,
                                       double u1_im, int64_t cocycle_n, int k_samples,
                                       uint64_t seed, char* buf, size_t cap);

#ifdef __cplusplus
}
#endif

#endif /* INFLATION_SPECTRA_H */
