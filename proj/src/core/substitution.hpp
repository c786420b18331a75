#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "algebraic.hpp"

namespace ifs {

// Binary inflation family: rho_m sends 0 -> 0 1^m, 1 -> 0.  Geometrically,
// 0 stands for an interval of length lambda and 1 for one of length 1,
// where lambda > 1 solves x^2 = x + m.

struct SubstMatrix {
    // entry(i,j) = number of letters i in the image of letter j
    std::array<std::array<long, 2>, 2> e;

    std::array<long, 2> apply(std::array<long, 2> counts) const {
        return {e[0][0] * counts[0] + e[0][1] * counts[1],
                e[1][0] * counts[0] + e[1][1] * counts[1]};
    }
    friend bool operator==(const SubstMatrix&, const SubstMatrix&) = default;
};

SubstMatrix subst_matrix(long m);  // [[1,1],[m,0]]

struct EigenData {
    double lambda_plus;   // (1+sqrt(4m+1))/2
    double lambda_minus;  // (1-sqrt(4m+1))/2 = -m/lambda_plus
    double freq[2];       // statistically normalised PF eigenvector (nu0, nu1)
    double length[2];     // natural tile lengths (lambda, 1)
};

EigenData eigen_data(long m);

enum class SpectralTag { Fibonacci, IntegerMultiplier, NonPV };

struct SpectralClass {
    SpectralTag tag;
    long ell;  // only meaningful for IntegerMultiplier, where m = ell(ell+1)
    friend bool operator==(const SpectralClass&, const SpectralClass&) = default;
};

SpectralClass classify(long m);

// A finite window of a (bi-)infinite word.  origin marks the seed cut: the
// letter at index origin is the first letter right of the cut.
struct Word {
    std::string letters;
    std::int64_t origin = 0;

    std::int64_t size() const { return std::int64_t(letters.size()); }
};

Word substitute(const Word& w, long m, long times);

// Central window of the bi-infinite fixed point of rho_m^2 with legal seed
// 0|0.  Both sides are limits of rho^{2n}("0"): the image 0 1^m 0^m starts
// and ends in 0, so prefixes stabilise to the right and suffixes to the left.
Word fixed_point(long m, std::int64_t n_letters);

std::pair<double, double> letter_frequencies(const Word& w);

struct Tile {
    char type;             // '0' or '1'
    AlgebraicPoint left;   // left endpoint in Z[lambda]
};

struct Patch {
    long m;
    std::vector<Tile> tiles;
    double radius;  // |embed(left)| of the extremal tiles
};

// Tile sequence of a word with exact left endpoints; the tile at the origin
// cut starts at 0, tiles left of the cut get negative endpoints.
Patch geometric_patch(const Word& w, long m);

// Constant-length partner rho~_ell: a -> a b^ell, b -> a^{ell+1}.
Word tilde_substitute(const Word& w, long ell, long times);
Word tilde_fixed_point(long ell, std::int64_t n_letters);  // seed a|a

// Local recoding between the two pictures for m = ell(ell+1):
// a corresponds to 0 and b to the block 1^{ell+1}.
Word recode_to_binary(const Word& w, long ell);
// Inverse direction; interior maximal 1-blocks must have length divisible
// by ell+1 (the fixed point has blocks of length ell(ell+1) exactly).
// Boundary-truncated 1-blocks are dropped together with the adjacent edge.
Word recode_from_binary(const Word& w, long ell);

// Checks that w occurs as a factor of a central fixed-point window of the
// given radius (factor-set legality at desk scale).
bool word_is_legal(const Word& w, long m, std::int64_t window_radius = 100000);

}  // namespace ifs
