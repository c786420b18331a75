// Command-line front end; every computation goes through the C API in
// inflation_spectra.h, output assembly stays here.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "csv_io.hpp"
#include "inflation_spectra.h"
#include "svg_out.hpp"

namespace {

using ifs_cli::CsvTable;
using ifs_cli::format_sig6;

constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

struct StatusError {
    ifs_status status;
};

void check(ifs_status st) {
    if (st != IFS_OK) throw StatusError{st};
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::fputs(content.c_str(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path: " + path);
    out << content;
}

std::pair<long, long> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const long v = std::stol(text);
        return {v, v};
    }
    return {std::stol(text.substr(0, colon)), std::stol(text.substr(colon + 1))};
}

std::string render_class(int cls, std::int64_t ell, const ifs_eigen_data& eig) {
    std::string out;
    switch (cls) {
        case IFS_CLASS_FIBONACCI:
            out = "Fibonacci";
            break;
        case IFS_CLASS_INTEGER_MULTIPLIER:
            out = "IntegerMultiplier ell=" + std::to_string(ell);
            break;
        default:
            out = "NonPV";
            break;
    }
    out += ", lambda=" + format_sig6(eig.lambda_plus);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectra of the binary inflation family 0 -> 0 1^m, 1 -> 0"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "text";
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "svg", "text"}));

    long m = 1;
    std::string range;
    long n = 100000;
    long resolution = 2048;
    double radius = 10000.0;
    double zmax = 130.0;
    double interior = 100.0;
    int samples = 20;
    std::uint64_t seed = 1;
    double tol = 1e-8;
    double u0 = 1.0, u0i = 0.0, u1 = 1.0, u1i = 0.0;
    std::string family = "q";

    auto* classify = app.add_subcommand("classify", "spectral class and multiplier");
    classify->add_option("--m", m, "family parameter")->required();

    auto* eigen = app.add_subcommand("eigen", "eigenvalues, frequencies, tile lengths");
    eigen->add_option("--m", m, "family parameter")->required();

    auto* fixed = app.add_subcommand("fixed-point", "central fixed-point window, cut marked |");
    fixed->add_option("--m", m, "family parameter")->required();
    fixed->add_option("--n", n, "letters in the window")->capture_default_str();

    auto* table = app.add_subcommand("table1", "minimal N with log lambda > mean log norm");
    table->add_option("--range", range, "m range a:b (default 1:20)");
    table->add_option("--resolution", resolution, "grid points per torus axis")
        ->capture_default_str();

    auto* figure = app.add_subcommand("figure1", "log lambda (dots) vs m(q) (crosses)");
    figure->add_option("--range", range, "m range a:b (default 1:30)");

    auto* mahler = app.add_subcommand("mahler", "Mahler measures of the q/r/s families");
    mahler->add_option("--family", family, "polynomial family")
        ->check(CLI::IsMember({"q", "r", "s"}));
    mahler->add_option("--m", m, "single index");
    mahler->add_option("--range", range, "index range a:b");
    mahler->add_option("--tol", tol, "quadrature tolerance")->capture_default_str();

    auto* lyap = app.add_subcommand("lyapunov", "sampled Lyapunov estimates");
    lyap->add_option("--m", m, "family parameter")->required();
    lyap->add_option("--n", n, "cocycle length")->capture_default_str();
    lyap->add_option("--samples", samples, "number of k samples")->capture_default_str();
    lyap->add_option("--seed", seed, "rng seed")->capture_default_str();

    auto* pair = app.add_subcommand("paircorr", "pair correlation coefficients and residual");
    pair->add_option("--m", m, "family parameter")->required();
    pair->add_option("--radius", radius, "window radius")->capture_default_str();
    pair->add_option("--zmax", zmax, "largest tabulated displacement")->capture_default_str();
    pair->add_option("--interior", interior, "residual interior radius")->capture_default_str();

    auto* report = app.add_subcommand("report", "diffraction verdict for weighted points");
    report->add_option("--m", m, "family parameter")->required();
    report->add_option("--u0", u0, "weight of type-0 points, real part")->capture_default_str();
    report->add_option("--u0i", u0i, "weight of type-0 points, imaginary part");
    report->add_option("--u1", u1, "weight of type-1 points, real part")->capture_default_str();
    report->add_option("--u1i", u1i, "weight of type-1 points, imaginary part");
    report->add_option("--n", n, "cocycle length")->capture_default_str();
    report->add_option("--samples", samples, "number of k samples")->capture_default_str();
    report->add_option("--seed", seed, "rng seed")->capture_default_str();

    // global options (--out, --format) may follow the subcommand name
    for (CLI::App* sub : {classify, eigen, fixed, table, figure, mahler, lyap, pair, report})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (classify->parsed()) {
            int cls = 0;
            std::int64_t ell = 0;
            ifs_eigen_data eig{};
            check(ifs_classify(m, &cls, &ell));
            check(ifs_eigen(m, &eig));
            write_output(out_path, render_class(cls, ell, eig) + "\n");
        } else if (eigen->parsed()) {
            ifs_eigen_data eig{};
            check(ifs_eigen(m, &eig));
            std::string text;
            text += "lambda_plus=" + format_sig6(eig.lambda_plus) + "\n";
            text += "lambda_minus=" + format_sig6(eig.lambda_minus) + "\n";
            text += "freq=(" + format_sig6(eig.freq0) + "," + format_sig6(eig.freq1) + ")\n";
            text += "lengths=(" + format_sig6(eig.length0) + "," + format_sig6(eig.length1) +
                    ")\n";
            write_output(out_path, text);
        } else if (fixed->parsed()) {
            ifs_word* word = nullptr;
            check(ifs_fixed_point(m, n, &word));
            std::string letters(std::size_t(ifs_word_length(word)) + 1, '\0');
            check(ifs_word_letters(word, letters.data(), letters.size()));
            letters.resize(letters.size() - 1);
            const auto origin = std::size_t(ifs_word_origin(word));
            ifs_word_free(word);
            write_output(out_path,
                         letters.substr(0, origin) + "|" + letters.substr(origin) + "\n");
        } else if (table->parsed()) {
            const auto [lo, hi] = parse_range(range.empty() ? "1:20" : range);
            std::vector<ifs_table1_row> rows(std::size_t(hi - lo + 1), ifs_table1_row{});
            check(ifs_table1(lo, hi, resolution, rows.data()));
            CsvTable csv;
            csv.header = {"m", "log_lambda", "N", "mean"};
            for (const auto& row : rows)
                csv.rows.push_back({std::to_string(row.m), format_sig6(row.log_lambda),
                                    std::to_string(row.n_min), format_sig6(row.mean)});
            write_output(out_path, ifs_cli::csv_emit(csv));
        } else if (figure->parsed()) {
            const auto [lo, hi] = parse_range(range.empty() ? "1:30" : range);
            std::vector<ifs_figure1_row> rows(std::size_t(hi - lo + 1), ifs_figure1_row{});
            check(ifs_figure1(lo, hi, rows.data()));
            if (format == "svg") {
                std::vector<double> xs, dots, crosses;
                for (const auto& row : rows) {
                    xs.push_back(double(row.m));
                    dots.push_back(row.log_lambda);
                    crosses.push_back(row.m_q);
                }
                write_output(out_path, ifs_cli::svg_scatter(xs, dots, crosses,
                                                            "log lambda (dots) vs m(q) (crosses)"));
            } else {
                CsvTable csv;
                csv.header = {"m", "log_lambda", "m_q"};
                for (const auto& row : rows)
                    csv.rows.push_back({std::to_string(row.m), format_sig6(row.log_lambda),
                                        format_sig6(row.m_q)});
                write_output(out_path, ifs_cli::csv_emit(csv));
            }
        } else if (mahler->parsed()) {
            const auto [lo, hi] = parse_range(!range.empty() ? range : std::to_string(m));
            const int fam = family == "q" ? IFS_POLY_Q : family == "r" ? IFS_POLY_R : IFS_POLY_S;
            CsvTable csv;
            csv.header = {"index", "value_roots", "err_roots", "value_quadrature",
                          "err_quadrature"};
            for (long i = lo; i <= hi; ++i) {
                ifs_mahler_row row{};
                check(ifs_mahler(fam, i, tol, &row));
                csv.rows.push_back({std::to_string(row.index), format_sig6(row.value_roots),
                                    format_sig6(row.error_roots),
                                    format_sig6(row.value_quadrature),
                                    format_sig6(row.error_quadrature)});
            }
            write_output(out_path, ifs_cli::csv_emit(csv));
        } else if (lyap->parsed()) {
            std::vector<ifs_lyapunov_row> rows(std::size_t(samples), ifs_lyapunov_row{});
            check(ifs_lyapunov_scan(m, n, samples, seed, rows.data()));
            CsvTable csv;
            csv.header = {"k", "chi_b", "chi_min", "chi_max", "chi_min_inverse"};
            double chi_b_sum = 0.0, min_margin = 1e300;
            for (const auto& row : rows) {
                chi_b_sum += row.chi_b;
                min_margin = std::min(min_margin, row.chi_min);
                csv.rows.push_back({format_sig6(row.k), format_sig6(row.chi_b),
                                    format_sig6(row.chi_min), format_sig6(row.chi_max),
                                    format_sig6(row.chi_min_inverse)});
            }
            write_output(out_path, ifs_cli::csv_emit(csv));
            std::fprintf(stderr, "chi_b mean=%s  min chi_min=%s\n",
                         format_sig6(chi_b_sum / double(samples)).c_str(),
                         format_sig6(min_margin).c_str());
        } else if (pair->parsed()) {
            ifs_paircorr* tab = nullptr;
            check(ifs_paircorr_build(m, radius, zmax, &tab));
            std::vector<ifs_paircorr_entry> entries(std::size_t(ifs_paircorr_size(tab)), ifs_paircorr_entry{});
            check(ifs_paircorr_entries(tab, entries.data(), std::int64_t(entries.size())));
            double residual = 0.0;
            const ifs_status res_st = ifs_paircorr_residual(tab, interior, &residual);
            ifs_paircorr_free(tab);
            check(res_st);
            CsvTable csv;
            csv.header = {"i", "j", "za", "zb", "z", "value"};
            for (const auto& e : entries)
                csv.rows.push_back({std::to_string(e.i), std::to_string(e.j),
                                    std::to_string(e.za), std::to_string(e.zb),
                                    format_sig6(e.z), format_sig6(e.value)});
            write_output(out_path, ifs_cli::csv_emit(csv));
            std::fprintf(stderr, "renormalization residual (interior %s) = %s\n",
                         format_sig6(interior).c_str(), format_sig6(residual).c_str());
        } else if (report->parsed()) {
            std::string buf(8192, '\0');
            check(ifs_spectral_report(m, u0, u0i, u1, u1i, n, samples, seed, buf.data(),
                                      buf.size()));
            buf.resize(buf.find('\0'));
            write_output(out_path, buf);
        }
    } catch (const StatusError& e) {
        std::fprintf(stderr, "error: %s\n", ifs_status_message(e.status));
        if (e.status == IFS_ERR_NO_CONVERGENCE) return kExitNoConvergence;
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return 0;
}
