#ifndef BUNKBED_RNG_HPP
#define BUNKBED_RNG_HPP

#include <cstdint>

namespace bunkbed {

// splitmix64 finalizer
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based stream: the state for (seed, index) depends only on those two
// values, so sample i draws the same bits no matter which thread runs it or
// in which order.
class SampleStream {
public:
    SampleStream(std::uint64_t seed, std::uint64_t index)
        : state_(mix64(seed ^ mix64(index ^ 0x5851f42d4c957f2dULL))) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n); n >= 1
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // exact comparison u/2^64 < num/den, i.e. Bernoulli(num/den) up to 2^-64
    bool bernoulli(std::uint64_t num, std::uint64_t den) {
        unsigned __int128 lhs = static_cast<unsigned __int128>(next()) * den;
        unsigned __int128 rhs = static_cast<unsigned __int128>(num) << 64;
        return lhs < rhs;
    }

private:
    std::uint64_t state_;
};

} // namespace bunkbed

#endif
