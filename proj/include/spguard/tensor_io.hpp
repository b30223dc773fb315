#pragma once

#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>

#include "spguard/errors.hpp"
#include "spguard/tensor.hpp"

namespace spguard {

// Flat binary tensor container: 16-byte header (magic "T3v1", then u32
// C, H, W little-endian) followed by C*H*W little-endian 64-bit floats.

namespace detail {

inline void put_u32_le(std::ostream& os, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    os.write(b, 4);
}

inline void put_u64_le(std::ostream& os, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    os.write(b, 8);
}

inline std::uint32_t get_u32_le(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

inline std::uint64_t get_u64_le(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

}  // namespace detail

inline void write_tensor(std::ostream& os, const Tensor3& t) {
    os.write("T3v1", 4);
    detail::put_u32_le(os, static_cast<std::uint32_t>(t.channels));
    detail::put_u32_le(os, static_cast<std::uint32_t>(t.height));
    detail::put_u32_le(os, static_cast<std::uint32_t>(t.width));
    for (double v : t.values) {
        detail::put_u64_le(os, std::bit_cast<std::uint64_t>(v));
    }
}

inline void write_tensor(const std::filesystem::path& path, const Tensor3& t) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("write_tensor: cannot open " + path.string());
    write_tensor(os, t);
    if (!os) throw ConfigError("write_tensor: write failed for " + path.string());
}

inline Tensor3 read_tensor(std::istream& is, const std::string& name = "<stream>") {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::string(magic, 4) != "T3v1") {
        throw ConfigError("read_tensor: " + name + " has a bad magic header");
    }
    const std::uint32_t c = detail::get_u32_le(is);
    const std::uint32_t h = detail::get_u32_le(is);
    const std::uint32_t w = detail::get_u32_le(is);
    if (!is || c == 0 || h == 0 || w == 0 || c > (1u << 16) || h > (1u << 16) || w > (1u << 16)) {
        throw ConfigError("read_tensor: " + name + " has an invalid shape header");
    }
    const std::size_t n = static_cast<std::size_t>(c) * h * w;
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) {
        vals[i] = std::bit_cast<double>(detail::get_u64_le(is));
        if (!is) throw ConfigError("read_tensor: " + name + " is truncated");
    }
    return Tensor3::from_values(static_cast<int>(c), static_cast<int>(h),
                                static_cast<int>(w), std::move(vals));
}

inline Tensor3 read_tensor(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigError("read_tensor: cannot open " + path.string());
    return read_tensor(is, path.string());
}

}  // namespace spguard
