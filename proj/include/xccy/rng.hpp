#pragma once

#include <cmath>
#include <cstdint>

namespace xccy {

/// Philox4x32-10 counter-based generator. A draw is a pure function of
/// (key, counter), so each path owns a substream addressed by its index and
/// results do not depend on how paths are scheduled across threads.
struct Philox4x32 {
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    struct Block {
        std::uint32_t v[4];
    };

    static Block generate(std::uint64_t key, std::uint64_t path, std::uint64_t ctr) {
        std::uint32_t k0 = static_cast<std::uint32_t>(key);
        std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
        std::uint32_t c0 = static_cast<std::uint32_t>(path);
        std::uint32_t c1 = static_cast<std::uint32_t>(path >> 32);
        std::uint32_t c2 = static_cast<std::uint32_t>(ctr);
        std::uint32_t c3 = static_cast<std::uint32_t>(ctr >> 32);
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c0;
            const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c2;
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
            const std::uint32_t n0 = hi1 ^ c1 ^ k0;
            const std::uint32_t n1 = lo1;
            const std::uint32_t n2 = hi0 ^ c3 ^ k1;
            const std::uint32_t n3 = lo0;
            c0 = n0;
            c1 = n1;
            c2 = n2;
            c3 = n3;
            k0 += kWeyl0;
            k1 += kWeyl1;
        }
        return Block{{c0, c1, c2, c3}};
    }

    /// Two uniforms in (0,1) from one block.
    static void uniform_pair(std::uint64_t key, std::uint64_t path, std::uint64_t ctr, double& u1, double& u2) {
        const Block b = generate(key, path, ctr);
        const std::uint64_t a = (static_cast<std::uint64_t>(b.v[0]) << 32) | b.v[1];
        const std::uint64_t c = (static_cast<std::uint64_t>(b.v[2]) << 32) | b.v[3];
        u1 = (static_cast<double>(a >> 11) + 0.5) * 0x1.0p-53;
        u2 = (static_cast<double>(c >> 11) + 0.5) * 0x1.0p-53;
    }
};

/// Inverse standard normal CDF, Wichura's AS 241 (double precision).
double inverse_normal_cdf(double p);

/// Standard normal pair addressed by (key, path, step).
inline void normal_pair(std::uint64_t key, std::uint64_t path, std::uint64_t ctr, double& z1, double& z2) {
    double u1, u2;
    Philox4x32::uniform_pair(key, path, ctr, u1, u2);
    z1 = inverse_normal_cdf(u1);
    z2 = inverse_normal_cdf(u2);
}

} // namespace xccy
