#pragma once

#include <array>
#include <vector>

#include "algebraic.hpp"
#include "linalg.hpp"

namespace ifs {

// Relative positions of level-0 tiles inside level-1 supertiles, measured
// between left endpoints: T00 = T01 = {0}, T10 = {lambda, ..., lambda+m-1},
// T11 empty.  Cardinalities reproduce the substitution matrix.
struct DisplacementMatrix {
    long m;
    std::array<std::vector<AlgebraicPoint>, 4> sets;  // index 2*i + j

    const std::vector<AlgebraicPoint>& at(int i, int j) const { return sets[std::size_t(2 * i + j)]; }
};

DisplacementMatrix displacement_matrix(long m);

// p(k) = e^{2 pi i lambda k} (1 + z + ... + z^{m-1}), z = e^{2 pi i k}.
cplx p_eval(long m, double k);

// Doubly 1-periodic lift with p~(x,y) = e^{2 pi i x} (1 + z + ... + z^{m-1}),
// z = e^{2 pi i y}; the section x = lambda k, y = k recovers p.
cplx p_tilde_eval(long m, double x, double y);

// Fourier matrix B(k) = [[1,1],[p(k),0]] and its torus lift.
Mat2c b_eval(long m, double k);
Mat2c b_tilde_eval(long m, double x, double y);

// Kronecker square A(k) = B(k) (x) conj(B(k)).
Mat4c a_eval(long m, double k);

// The unitary U conjugating the Kronecker algebra into real form.
Mat4c u_matrix();

// A_U(k) = U A(k) U^{-1}, real-valued, with c(k), s(k) the real and
// imaginary parts of p(k).
struct RealifiedEval {
    double k;
    double c, s;
    Mat4d matrix;
};

RealifiedEval a_u_eval(long m, double k);

// Zero set of p: Z_m = (1/m) Z \ Z ; empty for m = 1.
struct ZeroSet {
    long m;
    bool contains(double k, double tol = 1e-10) const;
    double distance(double k) const;  // +inf for m = 1
};

// Largest epsilon (after a 0.9 safety factor) such that
// A_U^{(2)}(k) = A_U(k/lambda) A_U(k) is entrywise positive with positive
// determinant on (0, epsilon]; found by grid scan plus bisection.
double epsilon_estimate(long m);

std::array<double, 4> pf_tensor(long m);  // w_PF = v_PF (x) v_PF, 1-norm 1

struct PositivityStep {
    std::array<double, 4> direction;  // w_n normalised to unit 1-norm
    double log_norm;                  // accumulated log ||w_n||_1
};

// w_n = A_U^{(2)}(k/lambda^{2n-2}) ... A_U^{(2)}(k) w_0 with per-step
// rescaling; every iterate is strictly positive and the direction tends to
// w_PF with per-step growth lambda^4.
std::vector<PositivityStep> positivity_iteration(long m, double k, std::array<double, 4> w0,
                                                 int n);

}  // namespace ifs
