#ifndef PRODMATCH_BITVEC_HPP
#define PRODMATCH_BITVEC_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>

namespace prodmatch {

/// Fixed-capacity bit set over vertex indices. 256 bits cover every
/// desk-scale ground set this library materializes; spaces larger than
/// that are rejected at construction, not silently truncated.
///
/// Disjointness, union and membership are word-parallel; these are the
/// inner loops of every matching search and Monte Carlo trial.
class BitVec {
public:
    static constexpr int kCapacity = 256;
    static constexpr int kWords = 4;

    constexpr BitVec() = default;

    void set(int i) { w_[static_cast<unsigned>(i) >> 6] |= bit(i); }
    void reset(int i) { w_[static_cast<unsigned>(i) >> 6] &= ~bit(i); }
    bool test(int i) const { return (w_[static_cast<unsigned>(i) >> 6] & bit(i)) != 0; }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : w_) if (w != 0) return false;
        return true;
    }

    bool intersects(const BitVec& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool contains_all(const BitVec& o) const {
        for (int i = 0; i < kWords; ++i)
            if ((o.w_[i] & ~w_[i]) != 0) return false;
        return true;
    }

    BitVec operator|(const BitVec& o) const {
        BitVec r;
        for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }

    BitVec operator&(const BitVec& o) const {
        BitVec r;
        for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }

    BitVec& operator|=(const BitVec& o) {
        for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
        return *this;
    }

    BitVec& operator-=(const BitVec& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    bool operator==(const BitVec& o) const = default;

    /// Total order matching lexicographic comparison of the sorted vertex
    /// lists when both sets have equal size: the set owning the lowest
    /// differing index comes first.
    bool operator<(const BitVec& o) const {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t diff = w_[i] ^ o.w_[i];
            if (diff) {
                std::uint64_t low = diff & (~diff + 1);
                return (w_[i] & low) != 0;
            }
        }
        return false;
    }

    /// Invokes fn(index) for every set bit, ascending.
    template <typename Fn>
    void for_each_bit(Fn&& fn) const {
        for (int wi = 0; wi < kWords; ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                int b = std::countr_zero(w);
                fn(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto w : w_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

private:
    static constexpr std::uint64_t bit(int i) {
        return std::uint64_t{1} << (static_cast<unsigned>(i) & 63u);
    }

    std::array<std::uint64_t, kWords> w_{};
};

} // namespace prodmatch

template <>
struct std::hash<prodmatch::BitVec> {
    std::size_t operator()(const prodmatch::BitVec& v) const { return v.hash(); }
};

#endif
