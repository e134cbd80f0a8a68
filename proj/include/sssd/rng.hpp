#pragma once

#include <cstdint>
#include <random>

namespace sssd {

/// splitmix64 finalizer. Bijective avalanche on 64 bits.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Engine seed for a Monte Carlo path: the path_index-th output of a
/// splitmix64 sequence whose state starts at the experiment seed. Paths may
/// therefore be generated in any order, on any thread, with identical results.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t path_index) {
    return mix64(seed + path_index * 0x9E3779B97F4A7C15ULL);
}

/// Quantile function of the standard normal distribution (inverse CDF),
/// algorithm AS 241 (Wichura, 1988), double-precision branch. Relative
/// accuracy ~1e-15 over p in (0, 1).
double inverse_normal_cdf(double p);

/// One reproducible Gaussian stream per (seed, path_index).
///
/// The generator is pinned for the lifetime of the project so that fixed-seed
/// regression values stay valid: uniforms come from std::mt19937_64 (whose
/// seeding and output sequence are fully specified by the C++ standard),
/// mapped to (0,1) as (x >> 11 + 0.5) * 2^-53, and converted to normals by the
/// AS 241 inverse CDF. Exactly one engine output is consumed per normal, so
/// the sequence position equals the draw counter regardless of call batching.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t path_index)
        : seed_(seed), path_index_(path_index), counter_(0),
          engine_(stream_seed(seed, path_index)) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t path_index() const { return path_index_; }
    std::uint64_t counter() const { return counter_; }

    /// Uniform draw on the open interval (0, 1).
    double next_uniform() {
        ++counter_;
        const std::uint64_t bits = engine_() >> 11; // top 53 bits
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal draw.
    double next_normal() { return inverse_normal_cdf(next_uniform()); }

private:
    std::uint64_t seed_;
    std::uint64_t path_index_;
    std::uint64_t counter_;
    std::mt19937_64 engine_;
};

} // namespace sssd
