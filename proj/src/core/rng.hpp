#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ifs {

// Seeded uniform sampling on (0,1) with an explicit 53-bit mapping, so the
// same seed yields the same samples on every platform.
class SampleRng {
  public:
    explicit SampleRng(std::uint64_t seed) : gen_(seed) {}

    double uniform01() {
        for (;;) {
            const double u = double(gen_() >> 11) * 0x1.0p-53;
            if (u > 0.0 && u < 1.0) return u;
        }
    }
    std::uint64_t next() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

inline std::vector<double> sample_ks(std::uint64_t seed, int count) {
    SampleRng rng(seed);
    std::vector<double> ks;
    ks.reserve(std::size_t(count));
    for (int i = 0; i < count; ++i) ks.push_back(rng.uniform01());
    return ks;
}

}  // namespace ifs
