// Exercises the shared-library surface through the public C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "inflation_spectra.h"

TEST_CASE("status message strings") {
    CHECK(std::strcmp(ifs_status_message(IFS_OK), "ok") == 0);
    CHECK(std::strlen(ifs_status_message(IFS_ERR_INVALID_ARGUMENT)) > 0);
}

TEST_CASE("classify and eigen") {
    int cls = -1;
    int64_t ell = -1;
    CHECK(ifs_classify(6, &cls, &ell) == IFS_OK);
    CHECK(cls == IFS_CLASS_INTEGER_MULTIPLIER);
    CHECK(ell == 2);
    CHECK(ifs_classify(3, &cls, &ell) == IFS_OK);
    CHECK(cls == IFS_CLASS_NON_PV);
    CHECK(ifs_classify(1, &cls, &ell) == IFS_OK);
    CHECK(cls == IFS_CLASS_FIBONACCI);
    CHECK(ifs_classify(0, &cls, &ell) == IFS_ERR_INVALID_ARGUMENT);
    CHECK(ifs_classify(2, nullptr, &ell) == IFS_ERR_NULL_POINTER);

    ifs_eigen_data eig{};
    CHECK(ifs_eigen(3, &eig) == IFS_OK);
    CHECK(eig.lambda_plus == doctest::Approx((1.0 + std::sqrt(13.0)) / 2.0));
    CHECK(eig.freq0 + eig.freq1 == doctest::Approx(1.0));

    int64_t mat[4] = {};
    CHECK(ifs_subst_matrix(5, mat) == IFS_OK);
    CHECK(mat[0] == 1);
    CHECK(mat[1] == 1);
    CHECK(mat[2] == 5);
    CHECK(mat[3] == 0);
}

TEST_CASE("word handle lifecycle") {
    ifs_word* word = nullptr;
    REQUIRE(ifs_fixed_point(2, 64, &word) == IFS_OK);
    REQUIRE(word != nullptr);
    const int64_t len = ifs_word_length(word);
    CHECK(len == 64);
    const int64_t origin = ifs_word_origin(word);
    CHECK(origin == 32);
    std::string buf(std::size_t(len) + 1, 'x');
    CHECK(ifs_word_letters(word, buf.data(), 4) == IFS_ERR_BUFFER_TOO_SMALL);
    CHECK(ifs_word_letters(word, buf.data(), buf.size()) == IFS_OK);
    CHECK(buf[std::size_t(origin) - 1] == '0');
    CHECK(buf[std::size_t(origin)] == '0');
    ifs_word_free(word);

    CHECK(ifs_fixed_point(0, 64, &word) == IFS_ERR_INVALID_ARGUMENT);
    CHECK(word == nullptr);
}

TEST_CASE("cocycle surface") {
    double chi = -1.0;
    CHECK(ifs_chi_b(2, 0.0, 500, &chi) == IFS_OK);
    CHECK(chi == doctest::Approx(std::log(2.0)).epsilon(1e-2));

    std::vector<ifs_lyapunov_row> rows(4);
    CHECK(ifs_lyapunov_scan(3, 5000, 4, 7, rows.data()) == IFS_OK);
    const double log_lambda = std::log((1.0 + std::sqrt(13.0)) / 2.0);
    for (const auto& row : rows) {
        CHECK(row.inverse_ok == 1);
        CHECK(row.chi_min + row.chi_max == doctest::Approx(log_lambda).epsilon(1e-12));
    }
    // determinism: same seed, same samples
    std::vector<ifs_lyapunov_row> again(4);
    CHECK(ifs_lyapunov_scan(3, 5000, 4, 7, again.data()) == IFS_OK);
    for (int i = 0; i < 4; ++i) {
        CHECK(rows[std::size_t(i)].k == again[std::size_t(i)].k);
        CHECK(rows[std::size_t(i)].chi_b == again[std::size_t(i)].chi_b);
    }

    double det = 1.0;
    int64_t hits = -1;
    CHECK(ifs_det_average(1, 0.37, 1000, &det, &hits) == IFS_OK);
    CHECK(det == 0.0);
    CHECK(hits == 0);

    double value = 0.0, err = 1.0;
    CHECK(ifs_mean_log_norm(18, 1, 256, IFS_MEAN_AUTO, &value, &err) == IFS_OK);
    CHECK(value == doctest::Approx(1.546).epsilon(2e-3));
    // a grid too coarse for the 1e-3 target is flagged, not silently accepted
    CHECK(ifs_mean_log_norm(3, 6, 16, IFS_MEAN_TORUS, &value, &err) ==
          IFS_ERR_NO_CONVERGENCE);
}

TEST_CASE("table and figure surfaces") {
    ifs_table1_row rows[2] = {};
    CHECK(ifs_table1(18, 19, 256, rows) == IFS_OK);
    CHECK(rows[0].n_min == 1);
    CHECK(rows[0].determined == 1);
    CHECK(rows[1].m == 19);

    ifs_figure1_row fig[3] = {};
    CHECK(ifs_figure1(1, 3, fig) == IFS_OK);
    CHECK(fig[0].m_q == doctest::Approx(std::log(3.0)).epsilon(1e-9));
    CHECK(fig[2].m_q > fig[2].log_lambda);

    ifs_mahler_row mrow{};
    CHECK(ifs_mahler(IFS_POLY_Q, 2, 0.0, &mrow) == IFS_OK);
    CHECK(mrow.value_roots == doctest::Approx(std::log(2.0 + std::sqrt(3.0))).epsilon(1e-9));
    CHECK(std::abs(mrow.value_roots - mrow.value_quadrature) < 1e-6);
    CHECK(ifs_mahler(99, 2, 0.0, &mrow) == IFS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("pair correlation surface") {
    ifs_paircorr* tab = nullptr;
    REQUIRE(ifs_paircorr_build(2, 1500.0, 40.0, &tab) == IFS_OK);
    const int64_t size = ifs_paircorr_size(tab);
    CHECK(size > 10);
    CHECK(ifs_paircorr_card(tab) > 1000);
    std::vector<ifs_paircorr_entry> entries(std::size_t(size), ifs_paircorr_entry{});
    CHECK(ifs_paircorr_entries(tab, entries.data(), 1) == IFS_ERR_BUFFER_TOO_SMALL);
    CHECK(ifs_paircorr_entries(tab, entries.data(), size) == IFS_OK);
    bool found_zero = false;
    for (const auto& e : entries) {
        if (e.i == 0 && e.j == 0 && e.za == 0 && e.zb == 0) {
            found_zero = true;
            CHECK(e.value == doctest::Approx(0.5).epsilon(5e-3));
        }
    }
    CHECK(found_zero);
    double residual = -1.0;
    CHECK(ifs_paircorr_residual(tab, 12.0, &residual) == IFS_OK);
    CHECK(residual >= 0.0);
    CHECK(residual < 0.05);
    ifs_paircorr_free(tab);
}

TEST_CASE("spectral report surface") {
    char buf[8192];
    CHECK(ifs_spectral_report(6, 1, 0, 1, 0, 2000, 2, 1, buf, sizeof buf) == IFS_OK);
    CHECK(std::string(buf).find("pure point (integer multiplier, ell=2)") != std::string::npos);
    CHECK(ifs_spectral_report(6, 1, 0, 0, 0, 2000, 2, 1, buf, sizeof buf) ==
          IFS_ERR_INVALID_ARGUMENT);
    CHECK(ifs_spectral_report(3, 1, 0, 1, 0, 2000, 2, 1, buf, 4) == IFS_ERR_BUFFER_TOO_SMALL);
}
