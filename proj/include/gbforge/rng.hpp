#ifndef GBFORGE_RNG_HPP
#define GBFORGE_RNG_HPP

#include <cstdint>

namespace gbforge {

// Deterministic, platform-independent random source. std:: distributions are
// implementation-defined, so all bounded sampling is hand-rolled here.

std::uint64_t splitmix64_next(std::uint64_t& state);

class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    /// Uniform in [0, bound); bound must be > 0. Unbiased (rejection sampling).
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi], both inclusive.
    std::int64_t int_in(std::int64_t lo, std::int64_t hi);
    /// Uniform in [0, 1) with 53 bits of precision.
    double unit();
    bool bernoulli(double p);

private:
    std::uint64_t s_[4]; // xoshiro256**
};

/// Splittable per-record seed: derive_seed(master, i) feeds the master seed
/// and the index through two splitmix64 steps. Documented in the README.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

} // namespace gbforge

#endif
