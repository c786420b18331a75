#include "substitution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ifs {

namespace {

void require_m(long m) {
    if (m < 1) throw std::invalid_argument("family parameter m must be >= 1");
}

std::string rho_image(const std::string& w, long m) {
    std::string out;
    out.reserve(w.size() * std::size_t(m + 1));
    for (char ch : w) {
        if (ch == '0') {
            out.push_back('0');
            out.append(std::size_t(m), '1');
        } else if (ch == '1') {
            out.push_back('0');
        } else {
            throw std::invalid_argument("word contains letters outside {0,1}");
        }
    }
    return out;
}

std::string tilde_image(const std::string& w, long ell) {
    std::string out;
    out.reserve(w.size() * std::size_t(ell + 1));
    for (char ch : w) {
        if (ch == 'a') {
            out.push_back('a');
            out.append(std::size_t(ell), 'b');
        } else if (ch == 'b') {
            out.append(std::size_t(ell + 1), 'a');
        } else {
            throw std::invalid_argument("word contains letters outside {a,b}");
        }
    }
    return out;
}

// The two one-sided halves of a bi-infinite fixed point of sigma^2 with a
// one-letter seed on each side of the cut.  sigma^2(seed) must start and end
// with the seed letter, so iteration extends prefixes (right) and suffixes
// (left).
template <typename Image>
Word central_window(char seed, std::int64_t n_letters, Image&& square_image) {
    if (n_letters < 2) throw std::invalid_argument("window needs at least 2 letters");
    const std::int64_t left_n = n_letters / 2;
    const std::int64_t right_n = n_letters - left_n;

    std::string right(1, seed);
    while (std::int64_t(right.size()) < right_n) right = square_image(right);
    right.resize(std::size_t(right_n));

    std::string left(1, seed);
    while (std::int64_t(left.size()) < left_n) left = square_image(left);
    left.erase(0, left.size() - std::size_t(left_n));

    Word w;
    w.letters = left + right;
    w.origin = left_n;
    return w;
}

}  // namespace

SubstMatrix subst_matrix(long m) {
    require_m(m);
    return SubstMatrix{{{{1, 1}, {m, 0}}}};
}

EigenData eigen_data(long m) {
    require_m(m);
    EigenData d;
    const double root = std::sqrt(4.0 * double(m) + 1.0);
    d.lambda_plus = (1.0 + root) / 2.0;
    d.lambda_minus = (1.0 - root) / 2.0;
    d.freq[0] = 1.0 / d.lambda_plus;
    d.freq[1] = (d.lambda_plus - 1.0) / d.lambda_plus;
    d.length[0] = d.lambda_plus;
    d.length[1] = 1.0;
    return d;
}

SpectralClass classify(long m) {
    require_m(m);
    if (m == 1) return {SpectralTag::Fibonacci, 0};
    const long r = std::lround(std::sqrt(4.0 * double(m) + 1.0));
    if (r * r == 4 * m + 1) return {SpectralTag::IntegerMultiplier, (r - 1) / 2};
    return {SpectralTag::NonPV, 0};
}

Word substitute(const Word& w, long m, long times) {
    require_m(m);
    if (times < 0) throw std::invalid_argument("iteration count must be >= 0");
    Word out = w;
    for (long t = 0; t < times; ++t) {
        const std::string left(out.letters.begin(), out.letters.begin() + out.origin);
        out.letters = rho_image(out.letters, m);
        out.origin = std::int64_t(rho_image(left, m).size());
    }
    return out;
}

Word fixed_point(long m, std::int64_t n_letters) {
    require_m(m);
    return central_window('0', n_letters,
                          [m](const std::string& w) { return rho_image(rho_image(w, m), m); });
}

std::pair<double, double> letter_frequencies(const Word& w) {
    if (w.letters.empty()) throw std::invalid_argument("empty word");
    const auto zeros = std::count(w.letters.begin(), w.letters.end(), '0');
    const double n = double(w.letters.size());
    return {double(zeros) / n, double(w.letters.size() - std::size_t(zeros)) / n};
}

Patch geometric_patch(const Word& w, long m) {
    const ModuleRing ring(m);
    Patch patch;
    patch.m = m;
    patch.tiles.resize(w.letters.size());

    AlgebraicPoint pos{0, 0};
    for (std::int64_t i = w.origin; i < w.size(); ++i) {
        patch.tiles[std::size_t(i)] = {w.letters[std::size_t(i)], pos};
        pos = ring.normalize(pos + ring.tile_length(w.letters[std::size_t(i)]));
    }
    double right = ring.embed(pos);
    pos = {0, 0};
    for (std::int64_t i = w.origin - 1; i >= 0; --i) {
        pos = ring.normalize(pos - ring.tile_length(w.letters[std::size_t(i)]));
        patch.tiles[std::size_t(i)] = {w.letters[std::size_t(i)], pos};
    }
    patch.radius = std::max(right, -ring.embed(pos));
    return patch;
}

Word tilde_substitute(const Word& w, long ell, long times) {
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    if (times < 0) throw std::invalid_argument("iteration count must be >= 0");
    Word out = w;
    for (long t = 0; t < times; ++t) {
        const std::string left(out.letters.begin(), out.letters.begin() + out.origin);
        out.letters = tilde_image(out.letters, ell);
        out.origin = std::int64_t(tilde_image(left, ell).size());
    }
    return out;
}

Word tilde_fixed_point(long ell, std::int64_t n_letters) {
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    return central_window('a', n_letters, [ell](const std::string& w) {
        return tilde_image(tilde_image(w, ell), ell);
    });
}

Word recode_to_binary(const Word& w, long ell) {
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    Word out;
    out.letters.reserve(w.letters.size() * std::size_t(ell + 1));
    for (std::int64_t i = 0; i < w.size(); ++i) {
        if (i == w.origin) out.origin = out.size();
        const char ch = w.letters[std::size_t(i)];
        if (ch == 'a') {
            out.letters.push_back('0');
        } else if (ch == 'b') {
            out.letters.append(std::size_t(ell + 1), '1');
        } else {
            throw std::invalid_argument("word contains letters outside {a,b}");
        }
    }
    if (w.origin == w.size()) out.origin = out.size();
    return out;
}

Word recode_from_binary(const Word& w, long ell) {
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    const long block = ell + 1;

    // 1-blocks decompose into (ell+1)-sub-blocks, each standing for one b.
    // A window edge may cut a block mid-sub-block; only that remainder is
    // undefined and gets dropped (the window shrinks by at most ell letters
    // per side).  Interior blocks must split evenly or the word is illegal.
    std::int64_t lo = 0, hi = w.size();
    {
        std::int64_t lead = 0;
        while (lead < hi && w.letters[std::size_t(lead)] == '1') ++lead;
        lo += lead % block;
        std::int64_t tail = 0;
        while (hi - 1 - tail >= lo && w.letters[std::size_t(hi - 1 - tail)] == '1') ++tail;
        hi -= tail % block;
    }

    Word out;
    std::int64_t i = lo;
    bool origin_set = false;
    while (i < hi) {
        if (!origin_set && i >= w.origin) {
            out.origin = out.size();
            origin_set = true;
        }
        const char ch = w.letters[std::size_t(i)];
        if (ch == '0') {
            out.letters.push_back('a');
            ++i;
            continue;
        }
        if (ch != '1') throw std::invalid_argument("word contains letters outside {0,1}");
        std::int64_t run = 0;
        while (i + run < hi && w.letters[std::size_t(i + run)] == '1') ++run;
        if (run % block != 0)
            throw std::invalid_argument("illegal word: interior 1-block length not divisible by ell+1");
        out.letters.append(std::size_t(run / block), 'b');
        i += run;
    }
    if (!origin_set) out.origin = out.size();
    return out;
}

bool word_is_legal(const Word& w, long m, std::int64_t window_radius) {
    if (w.letters.empty()) return true;
    if (w.letters.find_first_not_of("01") != std::string::npos) return false;
    const Word window = fixed_point(m, 2 * window_radius);
    return window.letters.find(w.letters) != std::string::npos;
}

}  // namespace ifs
