#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "spguard/tensor.hpp"

namespace spguard {

// Identifies one reproducible random stream. The same (seed, stream) pair
// always yields the same sequence; distinct stream indices give independent
// substreams of the same seed.
struct SeedSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

namespace detail {

// Philox4x32-10 counter-based generator. Counter-based means any block can be
// produced directly from (seed, stream, block index) with no carried state.
inline std::array<std::uint32_t, 4> philox4x32_block(std::uint64_t seed,
                                                     std::uint64_t stream,
                                                     std::uint64_t block) {
    constexpr std::uint64_t kMul0 = 0xD2511F53ULL;
    constexpr std::uint64_t kMul1 = 0xCD9E8D57ULL;
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    std::uint32_t k0 = static_cast<std::uint32_t>(seed);
    std::uint32_t k1 = static_cast<std::uint32_t>(seed >> 32);
    std::uint32_t c0 = static_cast<std::uint32_t>(block);
    std::uint32_t c1 = static_cast<std::uint32_t>(block >> 32);
    std::uint32_t c2 = static_cast<std::uint32_t>(stream);
    std::uint32_t c3 = static_cast<std::uint32_t>(stream >> 32);

    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = kMul0 * c0;
        const std::uint64_t p1 = kMul1 * c2;
        const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
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
    return {c0, c1, c2, c3};
}

}  // namespace detail

// Stream of i.i.d. standard normals via Box-Muller over Philox blocks.
// One 128-bit block yields two doubles.
class GaussianStream {
public:
    explicit GaussianStream(SeedSpec spec) : spec_(spec) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const auto blk = detail::philox4x32_block(spec_.seed, spec_.stream, block_++);
        const std::uint64_t a =
            (static_cast<std::uint64_t>(blk[0]) << 32) | blk[1];
        const std::uint64_t b =
            (static_cast<std::uint64_t>(blk[2]) << 32) | blk[3];
        // u1 in (0, 1] keeps the log finite; u2 in [0, 1).
        const double u1 = static_cast<double>((a >> 11) + 1) * 0x1.0p-53;
        const double u2 = static_cast<double>(b >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(phi);
        have_spare_ = true;
        return r * std::cos(phi);
    }

private:
    SeedSpec spec_;
    std::uint64_t block_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

inline Tensor3 gaussian_noise(int c, int h, int w, SeedSpec seed) {
    Tensor3 out(c, h, w);
    GaussianStream g(seed);
    for (double& v : out.values) v = g.next();
    return out;
}

}  // namespace spguard
