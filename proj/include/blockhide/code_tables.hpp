#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "blockhide/block.hpp"
#include "blockhide/errors.hpp"

namespace blockhide {

// 3-bit groups -> patterns with 1 or 3 black pixels, in group order 000..111.
// Group 101 maps to "1011", the one odd-count pattern the other seven rows
// leave unused; reusing "1001" here would collide with the 2-bit table below
// and make decoding ambiguous.
inline constexpr std::array<Pattern, 8> kThreeBitCodes = {
    Pattern{0b0001}, Pattern{0b0010}, Pattern{0b0100}, Pattern{0b0111},
    Pattern{0b1000}, Pattern{0b1011}, Pattern{0b1101}, Pattern{0b1110},
};

// 2-bit groups -> patterns with exactly 2 black pixels, in group order 00..11.
// "1010" and "1100" are absent on purpose: meeting one mid-extraction means
// the stream is corrupt.
inline constexpr std::array<Pattern, 4> kTwoBitCodes = {
    Pattern{0b0011}, Pattern{0b0101}, Pattern{0b0110}, Pattern{0b1001},
};

namespace detail {

inline constexpr std::uint8_t kNoGroup = 0xFF;

template <std::size_t N>
constexpr std::array<std::uint8_t, 16> reverse_table(const std::array<Pattern, N>& codes) {
    std::array<std::uint8_t, 16> table{};
    for (auto& e : table) e = kNoGroup;
    for (std::uint8_t group = 0; group < N; ++group) table[codes[group].code()] = group;
    return table;
}

inline constexpr std::array<std::uint8_t, 16> kReverse3 = reverse_table(kThreeBitCodes);
inline constexpr std::array<std::uint8_t, 16> kReverse2 = reverse_table(kTwoBitCodes);

}  // namespace detail

constexpr Pattern encode3(unsigned bits) {
    if (bits > 0b111) throw std::invalid_argument("encode3 group must fit in 3 bits");
    return kThreeBitCodes[bits];
}

constexpr Pattern encode2(unsigned bits) {
    if (bits > 0b11) throw std::invalid_argument("encode2 group must fit in 2 bits");
    return kTwoBitCodes[bits];
}

constexpr std::optional<unsigned> try_decode3(Pattern p) {
    const std::uint8_t g = detail::kReverse3[p.code()];
    if (g == detail::kNoGroup) return std::nullopt;
    return unsigned(g);
}

constexpr std::optional<unsigned> try_decode2(Pattern p) {
    const std::uint8_t g = detail::kReverse2[p.code()];
    if (g == detail::kNoGroup) return std::nullopt;
    return unsigned(g);
}

inline unsigned decode3(Pattern p) {
    if (const auto g = try_decode3(p)) return *g;
    throw NotInTable("pattern \"" + p.str() + "\" is not a 3-bit code");
}

inline unsigned decode2(Pattern p) {
    if (const auto g = try_decode2(p)) return *g;
    throw NotInTable("pattern \"" + p.str() + "\" is not a 2-bit code");
}

}  // namespace blockhide
