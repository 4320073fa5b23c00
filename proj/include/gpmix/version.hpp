#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace gpmix {

inline constexpr std::string_view kVersion = "1.0.0";

// FNV-1a 64-bit hash; used to fingerprint the constants table and scenario
// files so every output artifact records exactly which inputs produced it.
constexpr std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hash_hex(std::uint64_t h);

}  // namespace gpmix
