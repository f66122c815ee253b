#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace meadd {

// Deterministic, platform-independent randomness. mt19937_64 output is
// standardized; the distribution transforms below are written out explicitly
// because the std distribution objects are implementation-defined.
//
// Streams are derived from a root seed plus an index path, so every
// (realization, circuit, depth, basis) cell gets an independent stream and
// results do not depend on thread scheduling.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    // Box-Muller, no caching (keeps the stream position deterministic).
    double gaussian() {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    // Index into a probability vector by inverse CDF.
    int categorical(std::span<const double> probs) {
        double u = uniform();
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
            acc += probs[i];
            if (u < acc) return static_cast<int>(i);
        }
        return static_cast<int>(probs.size()) - 1;
    }

    // Sum of Bernoulli draws; m stays small enough here that O(m) is fine.
    long binomial(long m, double p) {
        long k = 0;
        for (long i = 0; i < m; ++i)
            if (uniform() < p) ++k;
        return k;
    }

  private:
    std::mt19937_64 engine_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Mix an index path into the root seed. Path order matters; values are
// absorbed one at a time through splitmix64 so sibling streams decorrelate.
inline RngStream derive_stream(std::uint64_t root, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = splitmix64(root ^ 0xA5A5A5A55A5A5A5AULL);
    for (std::uint64_t v : path) s = splitmix64(s ^ splitmix64(v));
    return RngStream(s);
}

} // namespace meadd
