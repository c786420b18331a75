#include "mahler.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "substitution.hpp"

namespace ifs {

namespace {
constexpr double kPi = std::numbers::pi;
}

IntPolynomial::IntPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(0);
    trim();
}

IntPolynomial IntPolynomial::monomial(long long coeff, std::size_t degree) {
    std::vector<long long> c(degree + 1, 0);
    c[degree] = coeff;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
}

void IntPolynomial::add_monomial(long long coeff, std::size_t degree) {
    if (c_.size() <= degree) c_.resize(degree + 1, 0);
    c_[degree] += coeff;
    trim();
}

std::complex<double> IntPolynomial::eval(std::complex<double> z) const {
    std::complex<double> acc{0, 0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + double(*it);
    return acc;
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<long long> out(p.c_.size() + q.c_.size() - 1, 0);
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        for (std::size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<long long> out(std::max(p.c_.size(), q.c_.size()), 0);
    for (std::size_t i = 0; i < p.c_.size(); ++i) out[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) out[i] += q.c_[i];
    return IntPolynomial(std::move(out));
}

bool IntPolynomial::divide_exact(const IntPolynomial& divisor, IntPolynomial* quotient) const {
    if (divisor.is_zero() || divisor.degree() > degree()) return false;
    std::vector<long long> rem = c_;
    const auto& d = divisor.c_;
    std::vector<long long> quot(degree() - divisor.degree() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        const long long lead = rem[i + divisor.degree()];
        if (lead % d.back() != 0) return false;
        const long long f = lead / d.back();
        quot[i] = f;
        for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= f * d[j];
    }
    for (long long v : rem)
        if (v != 0) return false;
    *quotient = IntPolynomial(std::move(quot));
    return true;
}

long long IntPolynomial::norm2_squared() const {
    long long s = 0;
    for (long long v : c_) s += v * v;
    return s;
}

IntPolynomial psi_poly(long ell) {
    if (ell < 0) throw std::invalid_argument("ell must be >= 0");
    return IntPolynomial(std::vector<long long>(std::size_t(ell) + 1, 1));
}

IntPolynomial q_poly(long m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    const IntPolynomial psi = psi_poly(m - 1);
    IntPolynomial q = psi * psi;
    q.add_monomial(2, std::size_t(m - 1));
    return q;
}

IntPolynomial r_poly(long m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    // monomials may collide at m = 1, where the sum telescopes to 3(z-1)^2
    IntPolynomial r;
    r.add_monomial(1, std::size_t(2 * m));
    r.add_monomial(2, std::size_t(m + 1));
    r.add_monomial(-6, std::size_t(m));
    r.add_monomial(2, std::size_t(m - 1));
    r.add_monomial(1, 0);
    return r;
}

IntPolynomial s_poly(long ell) {
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    IntPolynomial s;
    s.add_monomial(1, std::size_t(2 * ell + 2));
    s.add_monomial(1, std::size_t(2 * ell + 1));
    s.add_monomial(1, std::size_t(ell + 2));
    s.add_monomial(-6, std::size_t(ell + 1));
    s.add_monomial(1, std::size_t(ell));
    s.add_monomial(1, 1);
    s.add_monomial(1, 0);
    return s;
}

namespace {

// cyclotomic polynomials by exact division of z^n - 1
const IntPolynomial& cyclotomic(long n) {
    static std::vector<IntPolynomial> cache;  // cache[n-1] = Phi_n
    for (long k = long(cache.size()) + 1; k <= n; ++k) {
        IntPolynomial zknm1 = IntPolynomial::monomial(1, std::size_t(k));
        zknm1.add_monomial(-1, 0);
        for (long d = 1; d < k; ++d) {
            if (k % d != 0) continue;
            IntPolynomial quot;
            if (!zknm1.divide_exact(cache[std::size_t(d - 1)], &quot))
                throw std::logic_error("cyclotomic recursion failed");
            zknm1 = quot;
        }
        cache.push_back(zknm1);
    }
    return cache[std::size_t(n - 1)];
}

// strips z^k and all cyclotomic factors with index up to the degree bound;
// they contribute nothing to the Mahler measure
IntPolynomial strip_trivial_factors(IntPolynomial p) {
    const auto& c = p.coeffs();
    std::size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low > 0) {
        std::vector<long long> shifted(c.begin() + long(low), c.end());
        p = IntPolynomial(std::move(shifted));
    }
    bool stripped = true;
    while (stripped && p.degree() >= 1) {
        stripped = false;
        const long cap = std::min<long>(long(2 * p.degree() + 2), 128);
        for (long n = 1; n <= cap && p.degree() >= 1; ++n) {
            const IntPolynomial& phi = cyclotomic(n);
            if (phi.degree() > p.degree()) continue;
            IntPolynomial quot;
            while (p.divide_exact(phi, &quot)) {
                p = quot;
                stripped = true;
                if (phi.degree() > p.degree()) break;
            }
        }
    }
    return p;
}

std::vector<std::complex<double>> companion_roots(const IntPolynomial& p) {
    const std::size_t deg = p.degree();
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(long(deg), long(deg));
    const auto& c = p.coeffs();
    const double lead = double(c.back());
    for (std::size_t i = 0; i + 1 < deg; ++i) comp(long(i) + 1, long(i)) = 1.0;
    for (std::size_t i = 0; i < deg; ++i) comp(long(i), long(deg) - 1) = -double(c[i]) / lead;
    // Parlett-Reinsch style balancing pass
    bool changed = true;
    while (changed) {
        changed = false;
        for (long i = 0; i < long(deg); ++i) {
            double rnorm = comp.row(i).lpNorm<1>() - std::abs(comp(i, i));
            double cnorm = comp.col(i).lpNorm<1>() - std::abs(comp(i, i));
            if (rnorm == 0.0 || cnorm == 0.0) continue;
            int exponent = 0;
            std::frexp(rnorm / cnorm, &exponent);
            exponent /= 2;
            if (exponent != 0) {
                const double sc = std::ldexp(1.0, exponent);
                const double sr = std::ldexp(1.0, -exponent);
                if (std::ldexp(cnorm, exponent) + std::ldexp(rnorm, -exponent) <
                    0.9 * (cnorm + rnorm)) {
                    comp.row(i) *= sr;
                    comp.col(i) *= sc;
                    changed = true;
                }
            }
        }
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("companion eigensolve failed");
    std::vector<std::complex<double>> roots(deg);
    for (std::size_t i = 0; i < deg; ++i) roots[i] = solver.eigenvalues()(long(i));
    return roots;
}

}  // namespace

MahlerResult mahler_roots(const IntPolynomial& p_in) {
    if (p_in.is_zero()) throw std::invalid_argument("zero polynomial");
    IntPolynomial p = strip_trivial_factors(p_in);
    double value = std::log(std::abs(double(p.leading())));
    double err = 1e-14;
    if (p.degree() >= 1) {
        const auto roots = companion_roots(p);
        const double scale = std::sqrt(double(p.norm2_squared()));
        for (const auto& root : roots) {
            const double mod = std::abs(root);
            const double resid = std::abs(p.eval(root)) /
                                 (scale * std::pow(std::max(1.0, mod), double(p.degree())));
            if (resid > 1e-8) throw std::runtime_error("root residual too large");
            if (std::abs(mod - 1.0) < 1e-10) continue;  // on-circle convention
            if (mod > 1.0) value += std::log(mod);
        }
        err = 1e-12 * double(p.degree() + 1);
    }
    return {value, MahlerResult::Method::Roots, err};
}

namespace {

// log|p| on the circle, clamped at the Horner noise floor: evaluations below
// eps*||p||_2 are cancellation residue (and can be exactly zero); the region
// where the clamp acts is far narrower than the quadrature tolerances
struct CircleLog {
    const IntPolynomial& p;
    double floor;

    explicit CircleLog(const IntPolynomial& poly)
        : p(poly), floor(1e-17 * std::sqrt(double(poly.norm2_squared()))) {}

    double operator()(double t) const {
        const double v = std::abs(p.eval(std::polar(1.0, 2.0 * kPi * t)));
        return std::log(std::max(v, floor));
    }
};

// adaptive midpoint on one cell of the circle mean: splits while the
// refined value moves more than the cell budget, which halves per level so
// the leaf errors sum to the root budget (log zeros are integrable, so the
// recursion terminates well before the depth cap)
double adaptive_cell(const CircleLog& f, double t0, double w, double coarse, double tol,
                     int depth) {
    const double left = f(t0 + 0.25 * w);
    const double right = f(t0 + 0.75 * w);
    const double refined = 0.5 * (left + right);
    if (depth >= 24 || std::abs(refined - coarse) * w < tol)
        return refined * w;
    return adaptive_cell(f, t0, 0.5 * w, left, 0.5 * tol, depth + 1) +
           adaptive_cell(f, t0 + 0.5 * w, 0.5 * w, right, 0.5 * tol, depth + 1);
}

double circle_mean(const IntPolynomial& p, long n, double phase, double tol) {
    const CircleLog f(p);
    double total = 0.0;
    const double w = 1.0 / double(n);
    for (long i = 0; i < n; ++i) {
        const double t0 = (double(i) + phase) * w;
        total += adaptive_cell(f, t0, w, f(t0 + 0.5 * w), tol / double(n), 0);
    }
    return total;
}

}  // namespace

MahlerResult mahler_quadrature(const IntPolynomial& p, long n_points, double tol) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    if (n_points < 16) throw std::invalid_argument("n_points must be >= 16");
    // fixed non-dyadic phase keeps grid points off the zeros of our families
    const double phase = 0.137036128;
    long n = n_points;
    double prev = circle_mean(p, n, phase, tol);
    for (int pass = 0; pass < 10; ++pass) {
        n *= 2;
        const double cur = circle_mean(p, n, phase, tol);
        if (std::abs(cur - prev) < 4.0 * tol)
            return {cur, MahlerResult::Method::Quadrature, std::abs(cur - prev) + tol};
        prev = cur;
    }
    throw std::runtime_error("mahler_quadrature did not converge");
}

double sin_form_eval(long m, long n_points) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    // midpoint rule; the integrand is analytic and 1-periodic, so the error
    // decays exponentially in n_points
    double total = 0.0;
    for (long i = 0; i < n_points; ++i) {
        const double t = (double(i) + 0.5) / double(n_points);
        const double ratio = std::sin(double(m) * kPi * t) / std::sin(kPi * t);
        total += std::log(2.0 + ratio * ratio);
    }
    return total / double(n_points);
}

std::vector<Figure1Row> figure1_data(long m_from, long m_to) {
    if (m_from < 1 || m_from > m_to || m_to > 200)
        throw std::invalid_argument("need 1 <= m_from <= m_to <= 200");
    std::vector<Figure1Row> rows;
    rows.reserve(std::size_t(m_to - m_from + 1));
    for (long m = m_from; m <= m_to; ++m)
        rows.push_back({m, std::log(eigen_data(m).lambda_plus), mahler_roots(q_poly(m)).value});
    return rows;
}

BoundsReport bounds_check(long m) {
    const double mq = mahler_roots(q_poly(m)).value;
    BoundsReport rep;
    rep.m = m;
    rep.m_q = mq;
    rep.margin_sqrt46 = 0.5 * std::log(46.0) - mq;
    rep.margin_3sqrt5 = std::log(3.0 + std::sqrt(5.0)) - mq;
    rep.ok = rep.margin_sqrt46 > 0.0 && rep.margin_3sqrt5 >= -1e-9;
    return rep;
}

TwoVarLimits two_var_limits() {
    // 1-d integrand arsinh(sqrt2 sin(pi t)): smooth inside, midpoint with
    // Richardson refinement reaches 1e-8 comfortably
    const auto one_d = [](long n) {
        double s = 0.0;
        for (long i = 0; i < n; ++i) {
            const double t = (double(i) + 0.5) / double(n);
            s += std::asinh(std::sqrt(2.0) * std::sin(kPi * t));
        }
        return 2.0 * s / double(n);
    };
    double prev = one_d(1 << 12);
    double cur = one_d(1 << 14);
    if (std::abs(cur - prev) > 1e-9) cur = one_d(1 << 17);

    // 2-d log integrand with one integrable singularity at the origin;
    // midpoint cells straddle it harmlessly at this tolerance
    const long n2 = 2048;
    double s2 = 0.0;
    for (long i = 0; i < n2; ++i) {
        const double t1 = (double(i) + 0.5) / double(n2);
        double row = 0.0;
        for (long j = 0; j < n2; ++j) {
            const double t2 = (double(j) + 0.5) / double(n2);
            row += std::log(6.0 - 2.0 * std::cos(2.0 * kPi * t1) - 2.0 * std::cos(2.0 * kPi * t2) -
                            2.0 * std::cos(2.0 * kPi * (t1 + t2)));
        }
        s2 += row / double(n2);
    }
    return {cur, s2 / double(n2)};
}

PerronRootInfo perron_root_info(long m) {
    PerronRootInfo info;
    info.m = m;
    switch (m) {
        case 3:
            info.poly = IntPolynomial({1, -3, -4, -3, 1});
            info.cls = PerronClass::Salem;
            break;
        case 4:
            info.poly = IntPolynomial({1, 2, -2, -4, 1});
            info.cls = PerronClass::Pisot;
            break;
        case 5:
            info.poly = IntPolynomial({1, -6, 7, 0, -3, 0, 7, -6, 1});
            info.cls = PerronClass::Perron;
            break;
        default:
            throw std::invalid_argument("perron_root_info covers m in {3,4,5}");
    }
    auto roots = companion_roots(info.poly);
    std::vector<double> mods(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) mods[i] = std::abs(roots[i]);
    std::sort(mods.begin(), mods.end(), std::greater<>());
    info.xi = mods[0];
    info.second_modulus = mods[1];
    return info;
}

}  // namespace ifs
