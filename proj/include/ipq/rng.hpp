#pragma once

#include "ipq/common.hpp"

namespace ipq {

// xoshiro256++ seeded through splitmix64. Hand-rolled so that seeded runs are
// bit-reproducible across platforms (std::uniform_int_distribution is not)
// and cheap enough for the sampling inner loops.
class Rng {
public:
    explicit Rng(u64 seed) : seed_(seed) {
        u64 x = seed;
        for (auto& w : s_) {
            x += 0x9e3779b97f4a7c15ULL;
            u64 z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            w = z ^ (z >> 31);
        }
    }

    u64 seed() const { return seed_; }

    u64 next() {
        const u64 result = rotl(s_[0] + s_[3], 23) + s_[0];
        const u64 t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform on [0, bound), bound >= 1; unbiased via multiply-shift rejection
    u64 below(u64 bound) {
        u128 m = u128(next()) * bound;
        u64 lo = static_cast<u64>(m);
        if (lo < bound) {
            const u64 threshold = -bound % bound;
            while (lo < threshold) {
                m = u128(next()) * bound;
                lo = static_cast<u64>(m);
            }
        }
        return static_cast<u64>(m >> 64);
    }

    // true with probability num/den (exact integer draw)
    bool chance(u64 num, u64 den) { return below(den) < num; }

    // uniform on [0,1) with 53 random bits; used only for generator densities
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static u64 rotl(u64 x, int k) { return (x << k) | (x >> (64 - k)); }

    u64 s_[4];
    u64 seed_;
};

}  // namespace ipq
