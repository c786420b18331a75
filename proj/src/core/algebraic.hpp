#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace ifs {

// An element a + b*lambda of Z[lambda], where lambda is the leading root of
// x^2 = x + m.  All arithmetic on the integer pair is exact; the real value
// is recovered through ModuleRing::embed.
struct AlgebraicPoint {
    std::int64_t a{0};
    std::int64_t b{0};

    friend AlgebraicPoint operator+(AlgebraicPoint p, AlgebraicPoint q) {
        return {p.a + q.a, p.b + q.b};
    }
    friend AlgebraicPoint operator-(AlgebraicPoint p, AlgebraicPoint q) {
        return {p.a - q.a, p.b - q.b};
    }
    AlgebraicPoint operator-() const { return {-a, -b}; }
    friend bool operator==(AlgebraicPoint, AlgebraicPoint) = default;
    friend auto operator<=>(AlgebraicPoint, AlgebraicPoint) = default;
};

// Arithmetic context for Z[lambda] at a fixed family parameter m.
//
// When lambda = ell+1 is an integer (m = ell(ell+1)), Z[lambda] = Z and
// points are kept in the folded normal form b = 0, so that equality tests
// remain exact.  Otherwise lambda is irrational and (a,b) is unique as is.
class ModuleRing {
  public:
    explicit ModuleRing(long m);

    long m() const { return m_; }
    double lambda() const { return lambda_; }
    bool integer_lambda() const { return lambda_int_ != 0; }
    long lambda_int() const;  // throws unless integer_lambda()

    AlgebraicPoint normalize(AlgebraicPoint p) const;

    // lambda * (a + b lambda) = b m + (a + b) lambda
    AlgebraicPoint mul_lambda(AlgebraicPoint p) const;

    // (a + b lambda) / lambda = (b - a/m) + (a/m) lambda, defined only when
    // the result stays in Z[lambda].  In the folded integer form this is
    // plain divisibility by ell+1.
    std::optional<AlgebraicPoint> div_lambda(AlgebraicPoint p) const;

    double embed(AlgebraicPoint p) const { return double(p.a) + double(p.b) * lambda_; }

    AlgebraicPoint tile_length(char type) const;  // '0' -> lambda, '1' -> 1

  private:
    long m_;
    double lambda_;
    long lambda_int_;  // ell+1 when integer, else 0
};

}  // namespace ifs
