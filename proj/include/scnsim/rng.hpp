// SPDX-License-Identifier: Apache-2.0
//
// scnsim: context-aware cell association simulator for two-tier small cell networks

#ifndef SCNSIM_RNG_HPP
#define SCNSIM_RNG_HPP

#include <cstdint>
#include <cmath>
#include <random>

namespace scnsim {

/// Deterministic random stream. All conversions from raw 64-bit output are
/// done by hand so that a given seed yields the same draw sequence on every
/// platform and standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Unit-mean exponential draw.
    double exponential() { return -std::log1p(-unit()); }

    std::uint64_t raw() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

/// SplitMix64 step; used to derive independent per-run seeds from a base seed
/// and grid coordinates.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(a) ^ (0x9e3779b97f4a7c15ULL + b));
}

} // namespace scnsim

#endif
