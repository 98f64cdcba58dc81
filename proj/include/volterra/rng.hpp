#pragma once

#include <cmath>
#include <cstdint>

namespace volterra {

/// Identifies one path's random stream within an ensemble.
struct SeedTag {
    std::uint64_t master_seed = 0;
    std::uint64_t path_index = 0;
};

namespace detail {

// SplitMix64 finalizer (Stafford mix13). Full-avalanche 64-bit mix.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

/// Counter-based random stream: draw k is a pure function of
/// (master_seed, path_index, k), so paths can be generated in any order
/// on any number of threads and always reproduce bit-for-bit.
class CounterRng {
public:
    explicit CounterRng(SeedTag tag)
        : key_(detail::mix64(tag.master_seed ^ 0x2545f4914f6cdd1dULL) ^
               detail::mix64(tag.path_index + 0x9e3779b97f4a7c15ULL)),
          counter_(0) {}

    std::uint64_t next_u64() {
        const std::uint64_t c = counter_++;
        return detail::mix64(key_ + c * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform on (0, 1]: never returns 0, safe under log.
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; consumes exactly two counter values.
    double next_normal() {
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return r * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_;
};

} // namespace volterra
