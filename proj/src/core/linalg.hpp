#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace ifs {

using cplx = std::complex<double>;

struct Mat2c {
    // row-major entries
    cplx a, b, c, d;

    friend Mat2c operator*(const Mat2c& x, const Mat2c& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    cplx det() const { return a * d - b * c; }
    double frobenius() const {
        return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
    }
    void scale(double s) { a *= s; b *= s; c *= s; d *= s; }
    // inverse via det and classical adjoint; caller checks det != 0
    Mat2c inverse() const {
        const cplx dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }
};

template <typename T>
struct Mat4 {
    std::array<std::array<T, 4>, 4> e{};

    friend Mat4 operator*(const Mat4& x, const Mat4& y) {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                T s{};
                for (int k = 0; k < 4; ++k) s += x.e[i][k] * y.e[k][j];
                r.e[i][j] = s;
            }
        return r;
    }
    std::array<T, 4> operator*(const std::array<T, 4>& v) const {
        std::array<T, 4> r{};
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) r[i] += e[i][k] * v[k];
        return r;
    }
    double frobenius() const {
        double s = 0;
        for (const auto& row : e)
            for (const auto& x : row) s += std::norm(std::complex<double>(x));
        return std::sqrt(s);
    }
};

using Mat4c = Mat4<cplx>;
using Mat4d = Mat4<double>;

inline double det4(const Mat4d& m) {
    // expansion by LU with partial pivoting on a copy
    auto a = m.e;
    double det = 1.0;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (a[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < 4; ++r) {
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

// Deterministic pairwise (tree) reduction; the result does not depend on any
// threading of the producers, only on the element order.
double pairwise_sum(const double* data, std::size_t n);

}  // namespace ifs
