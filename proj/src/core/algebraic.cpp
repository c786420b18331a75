#include "algebraic.hpp"

#include <cmath>

namespace ifs {

ModuleRing::ModuleRing(long m) : m_(m) {
    if (m < 1) throw std::invalid_argument("ModuleRing: m must be >= 1");
    lambda_ = (1.0 + std::sqrt(4.0 * double(m) + 1.0)) / 2.0;
    lambda_int_ = 0;
    // lambda is an integer iff 4m+1 is an odd perfect square (2l+1)^2.
    const long r = std::lround(std::sqrt(4.0 * double(m) + 1.0));
    if (r * r == 4 * m + 1) {
        lambda_int_ = (1 + r) / 2;
        lambda_ = double(lambda_int_);
    }
}

long ModuleRing::lambda_int() const {
    if (!integer_lambda()) throw std::logic_error("lambda is irrational for this m");
    return lambda_int_;
}

AlgebraicPoint ModuleRing::normalize(AlgebraicPoint p) const {
    if (lambda_int_ != 0 && p.b != 0) return {p.a + p.b * lambda_int_, 0};
    return p;
}

AlgebraicPoint ModuleRing::mul_lambda(AlgebraicPoint p) const {
    return normalize({p.b * m_, p.a + p.b});
}

std::optional<AlgebraicPoint> ModuleRing::div_lambda(AlgebraicPoint p) const {
    if (lambda_int_ != 0) {
        const long l1 = lambda_int_;
        const std::int64_t v = p.a + p.b * l1;
        if (v % l1 != 0) return std::nullopt;
        return AlgebraicPoint{v / l1, 0};
    }
    if (p.a % m_ != 0) return std::nullopt;
    const std::int64_t q = p.a / m_;
    return AlgebraicPoint{p.b - q, q};
}

AlgebraicPoint ModuleRing::tile_length(char type) const {
    if (type == '0') return normalize({0, 1});
    if (type == '1') return {1, 0};
    throw std::invalid_argument("tile type must be '0' or '1'");
}

}  // namespace ifs
