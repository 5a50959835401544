#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace treechain {

using Bytes = std::vector<uint8_t>;
using ByteSpan = std::span<const uint8_t>;

/// 256-bit content digest. Equality is byte-wise.
using Digest = std::array<uint8_t, 32>;

inline constexpr size_t DIGEST_SIZE = 32;

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline ByteSpan as_span(const Digest& d) {
    return ByteSpan(d.data(), d.size());
}

std::string to_hex(ByteSpan data);
Bytes from_hex(std::string_view hex);  // throws std::invalid_argument on bad input

struct DigestHash {
    size_t operator()(const Digest& d) const {
        size_t h;
        static_assert(sizeof(h) <= DIGEST_SIZE);
        __builtin_memcpy(&h, d.data(), sizeof(h));
        return h;
    }
};

}  // namespace treechain
