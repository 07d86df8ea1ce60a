#ifndef PRODMATCH_RNG_HPP
#define PRODMATCH_RNG_HPP

#include <cstdint>
#include <vector>

namespace prodmatch {

/// SplitMix64 (Vigna). Used only to expand seeds into generator state.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

/// xoshiro256** (Blackman/Vigna). Deterministic splittable streams: the
/// state of stream t under seed S is derived from SplitMix64 keyed by
/// (S, t), so results are reproducible and independent of how trials are
/// distributed over threads.
class Xoshiro256StarStar {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256StarStar(std::uint64_t seed, std::uint64_t stream = 0) {
        SplitMix64 outer(seed);
        std::uint64_t key = outer.next() ^ (stream * 0xbf58476d1ce4e5b9ull);
        SplitMix64 inner(key);
        for (auto& w : s_) w = inner.next();
        // All-zero state is the one fixed point of the transition; the
        // double SplitMix64 expansion cannot hit it for any (seed, stream),
        // but guard anyway.
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[3] = 1;
    }

    std::uint64_t next() {
        std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    std::uint64_t operator()() { return next(); }
    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

    /// Unbiased uniform draw from [0, bound) by rejection.
    std::uint64_t uniform_below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    /// Partial Fisher-Yates: after the call, v[0..take) is a uniform random
    /// sample of `take` distinct entries of v, in random order.
    void shuffle_prefix(std::vector<int>& v, std::size_t take) {
        for (std::size_t i = 0; i < take; ++i) {
            std::size_t j = i + static_cast<std::size_t>(uniform_below(v.size() - i));
            std::swap(v[i], v[j]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

} // namespace prodmatch

#endif
