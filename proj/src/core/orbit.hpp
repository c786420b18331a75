#pragma once

#include <cstdint>

namespace ifs {

// Exact orbit of the toral endomorphism (x,y) -> (x,y)M mod 1, M = [[1,1],[m,0]],
// which realises k -> lambda*k on the section x = lambda*y.
//
// The point is stored as a rational pair (A/Q, C/Q) with the fixed prime
// denominator Q below, so every step is exact modular arithmetic: the usual
// floating-point iteration loses one bit per step for lambda = 2 (and decays
// similarly for the other integer multipliers), which silently parks the
// orbit at the fixed point 0.  Rational orbits have astronomically long
// periods here (multiplicative orders of 2, 3, 5 modulo Q all exceed 2^59)
// and equidistribute like generic points.
//
// When lambda = ell+1 is an integer, the modular line A = lambda*C (mod Q) is
// invariant under the step, so a start on it stays a true 1-d orbit of
// k -> lambda*k mod 1.
class TorusOrbit {
  public:
    static constexpr std::uint64_t kDen = 4611686018427388073ULL;  // prime > 2^62

    // start nearest to (lambda*k0 mod 1, k0 mod 1)
    TorusOrbit(long m, double k0);
    // explicit rational start (A/Q, C/Q)
    TorusOrbit(long m, std::uint64_t a_num, std::uint64_t c_num);

    void advance();

    double x() const { return double(a_) / double(kDen); }  // lambda^{j+1} k mod 1
    double y() const { return double(c_) / double(kDen); }  // lambda^j k mod 1
    std::uint64_t x_num() const { return a_; }
    std::uint64_t y_num() const { return c_; }

  private:
    long m_;
    std::uint64_t a_, c_;
};

// lambda^j * k mod 1 in double-double arithmetic; reliable for moderate j
// only (used to cross-check orbit starts and short cocycles).
double direct_lambda_pow_arg(long m, double k, long j);

}  // namespace ifs
