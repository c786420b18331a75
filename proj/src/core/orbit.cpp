#include "orbit.hpp"

#include <cmath>
#include <stdexcept>

namespace ifs {

namespace {

using u128 = unsigned __int128;

std::uint64_t mod_q(u128 v) { return std::uint64_t(v % TorusOrbit::kDen); }

std::uint64_t round_to_num(double frac) {
    // frac in [0,1); nearest numerator over kDen
    double v = frac - std::floor(frac);
    const double num = std::nearbyint(v * double(TorusOrbit::kDen));
    auto n = std::uint64_t(num);
    if (n >= TorusOrbit::kDen) n -= TorusOrbit::kDen;
    return n;
}

// two-term (double-double) product accumulation for lambda^j * k
struct DD {
    double hi, lo;
};

DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

DD dd_mul(DD x, double y) {
    DD p = two_prod(x.hi, y);
    p.lo += x.lo * y;
    const double s = p.hi + p.lo;
    return {s, p.lo - (s - p.hi)};
}

DD dd_frac(DD x) {
    const double f = std::floor(x.hi);
    DD r{x.hi - f, x.lo};
    const double s = r.hi + r.lo;
    r = {s, r.lo - (s - r.hi)};
    r.hi -= std::floor(r.hi + r.lo);
    return r;
}

}  // namespace

TorusOrbit::TorusOrbit(long m, double k0) : m_(m) {
    if (m < 1) throw std::invalid_argument("TorusOrbit: m must be >= 1");
    const double lambda = (1.0 + std::sqrt(4.0 * double(m) + 1.0)) / 2.0;
    c_ = round_to_num(k0);
    const long r = std::lround(std::sqrt(4.0 * double(m) + 1.0));
    if (r * r == 4 * m + 1) {
        // integer lambda: place the start exactly on the invariant modular line
        const std::uint64_t l = std::uint64_t((1 + r) / 2);
        a_ = mod_q(u128(l) * c_);
    } else {
        DD lk = dd_frac(dd_mul({k0, 0.0}, lambda));
        a_ = round_to_num(lk.hi);
    }
}

TorusOrbit::TorusOrbit(long m, std::uint64_t a_num, std::uint64_t c_num)
    : m_(m), a_(a_num % kDen), c_(c_num % kDen) {
    if (m < 1) throw std::invalid_argument("TorusOrbit: m must be >= 1");
}

void TorusOrbit::advance() {
    const std::uint64_t next_a = mod_q(u128(a_) + u128(std::uint64_t(m_)) * c_);
    c_ = a_;
    a_ = next_a;
}

double direct_lambda_pow_arg(long m, double k, long j) {
    // lambda is irrational in general, so reduction mod 1 must wait until
    // the full product lambda^j * k is formed; the two-term representation
    // keeps enough headroom for moderate j
    const double lambda = (1.0 + std::sqrt(4.0 * double(m) + 1.0)) / 2.0;
    DD t{k, 0.0};
    for (long i = 0; i < j; ++i) t = dd_mul(t, lambda);
    t = dd_frac(t);
    double v = t.hi + t.lo;
    v -= std::floor(v);
    return v;
}

}  // namespace ifs
