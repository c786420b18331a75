#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace ifs {

// Dense integer polynomial c0 + c1 z + ... + cd z^d with exact coefficient
// arithmetic (construction, sums of monomials, products).
class IntPolynomial {
  public:
    IntPolynomial() : c_{0} {}
    explicit IntPolynomial(std::vector<long long> coeffs);

    static IntPolynomial monomial(long long coeff, std::size_t degree);

    std::size_t degree() const { return c_.size() - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }
    const std::vector<long long>& coeffs() const { return c_; }
    long long leading() const { return c_.back(); }

    void add_monomial(long long coeff, std::size_t degree);
    std::complex<double> eval(std::complex<double> z) const;

    friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
    friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    // exact division; nullopt-like bool result, quotient valid only on true
    bool divide_exact(const IntPolynomial& divisor, IntPolynomial* quotient) const;

    long long norm2_squared() const;  // sum of squared coefficients

  private:
    void trim();
    std::vector<long long> c_;
};

IntPolynomial psi_poly(long ell);  // 1 + z + ... + z^ell
IntPolynomial q_poly(long m);      // 2 z^{m-1} + psi_{m-1}(z)^2
IntPolynomial r_poly(long m);      // z^{2m} + 2 z^{m+1} - 6 z^m + 2 z^{m-1} + 1
IntPolynomial s_poly(long ell);    // z^{2l+2} + z^{2l+1} + z^{l+2} - 6 z^{l+1} + z^l + z + 1

struct MahlerResult {
    double value;
    enum class Method { Roots, Quadrature } method;
    double error_estimate;
};

// Jensen route: log|lead| plus log-moduli of the roots outside the unit
// circle (balanced companion-matrix eigenvalues); exact cyclotomic and
// monomial factors are stripped first, and roots within 1e-10 of the circle
// contribute zero.
MahlerResult mahler_roots(const IntPolynomial& p);

// Mean of log|p| over the unit circle by midpoint quadrature with local
// subdivision near circle zeros; refines until two successive totals agree.
MahlerResult mahler_quadrature(const IntPolynomial& p, long n_points = 1024, double tol = 1e-8);

// int_0^1 log(2 + (sin m pi t / sin pi t)^2) dt, an analytic 1-periodic
// integrand equal to the Mahler measure of q_m.
double sin_form_eval(long m, long n_points = 4096);

struct Figure1Row {
    long m;
    double log_lambda;
    double m_q;
};

std::vector<Figure1Row> figure1_data(long m_from, long m_to);

struct BoundsReport {
    long m;
    double m_q;
    double margin_sqrt46;   // log sqrt(46) - m(q), must be > 0
    double margin_3sqrt5;   // log(3+sqrt 5) - m(q), must be >= -1e-9
    bool ok;
};

BoundsReport bounds_check(long m);

struct TwoVarLimits {
    double limit_q;  // 2 int_0^1 arsinh(sqrt2 sin(pi t)) dt
    double limit_s;  // two-dimensional torus integral for the s family
};

TwoVarLimits two_var_limits();

enum class PerronClass { Salem, Pisot, Perron };

struct PerronRootInfo {
    long m;
    IntPolynomial poly;
    double xi;              // largest root, equals exp(m(q_m))
    double second_modulus;  // second-largest root modulus
    PerronClass cls;
};

PerronRootInfo perron_root_info(long m);  // m in {3,4,5}

}  // namespace ifs
