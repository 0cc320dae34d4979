#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace krylov::models {

/// Philox4x32-10 counter-based block function (Salmon et al., SC'11).
/// Stateless: output is a pure function of (counter, key), which makes
/// sub-streams cheap and runs reproducible across any thread schedule.
struct Philox4x32 {
    static constexpr uint32_t M0 = 0xD2511F53u;
    static constexpr uint32_t M1 = 0xCD9E8D57u;
    static constexpr uint32_t W0 = 0x9E3779B9u;
    static constexpr uint32_t W1 = 0xBB67AE85u;

    static std::array<uint32_t, 4> block(std::array<uint32_t, 4> ctr,
                                         std::array<uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const uint64_t p0 = static_cast<uint64_t>(M0) * ctr[0];
            const uint64_t p1 = static_cast<uint64_t>(M1) * ctr[2];
            const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
            const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += W0;
            key[1] += W1;
        }
        return ctr;
    }
};

/// SplitMix64 finalizer, used only to hash (seed, index, tag) into stream keys.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// FNV-1a over a short label; gives component tags stable numeric ids.
inline uint64_t stream_tag(std::string_view label) {
    uint64_t h = 0xCBF29CE484222325ull;
    for (const char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ull;
    }
    return h;
}

/// One independent random stream, keyed by (master seed, realization index,
/// component tag). Streams with distinct keys never share Philox blocks, so
/// ensemble members are independent regardless of evaluation order.
class RngStream {
public:
    RngStream(uint64_t master_seed, uint64_t realization_index, uint64_t component_tag) {
        const uint64_t k = splitmix64(splitmix64(splitmix64(master_seed) ^ realization_index) ^ component_tag);
        const uint64_t c = splitmix64(k);
        key_ = {static_cast<uint32_t>(k), static_cast<uint32_t>(k >> 32)};
        ctr_hi_ = {static_cast<uint32_t>(c), static_cast<uint32_t>(c >> 32)};
    }

    RngStream(uint64_t master_seed, uint64_t realization_index, std::string_view label)
        : RngStream(master_seed, realization_index, stream_tag(label)) {}

    uint32_t next_u32() {
        if (pos_ == 4) {
            buf_ = Philox4x32::block({static_cast<uint32_t>(block_), static_cast<uint32_t>(block_ >> 32),
                                      ctr_hi_[0], ctr_hi_[1]},
                                     key_);
            ++block_;
            pos_ = 0;
        }
        return buf_[pos_++];
    }

    uint64_t next_u64() {
        const uint64_t lo = next_u32();
        const uint64_t hi = next_u32();
        return (hi << 32) | lo;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller; platform-independent given the stream.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01(); // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::array<uint32_t, 2> key_{};
    std::array<uint32_t, 2> ctr_hi_{};
    std::array<uint32_t, 4> buf_{};
    uint64_t block_ = 0;
    int pos_ = 4;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace krylov::models
