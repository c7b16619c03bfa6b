#pragma once

// Embedding and extraction over the 2x2 block grid.
//
// Both sides walk the grid row by row, left to right, and skip pure blocks.
// The embedder picks the bit width from the HOST block's category: an A block
// (2 black pixels) swallows 3 bits and is rewritten with a 3-bit code pattern
// (1 or 3 black pixels), a B block swallows 2 bits and is rewritten with a
// 2-bit code pattern (2 black pixels). The extractor recovers the width from
// the STEGO block's black count alone, which is what keeps the two walks in
// lockstep without any side channel.
//
// Framed mode prefixes the payload with a 32-bit big-endian bit-length
// header; payload bytes follow most significant bit first. The final block
// group is zero-padded when the stream ends inside it, and the extractor
// drops those padding bits.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "blockhide/bitstream.hpp"
#include "blockhide/block.hpp"
#include "blockhide/code_tables.hpp"
#include "blockhide/errors.hpp"
#include "blockhide/image.hpp"

namespace blockhide {

// Bits taken by the length header in framed mode.
inline constexpr std::uint32_t kFrameHeaderBits = 32;

struct CapacityReport {
    std::uint64_t count_a = 0;     // blocks carrying 3 bits each
    std::uint64_t count_b = 0;     // blocks carrying 2 bits each
    std::uint64_t count_pure = 0;  // skipped blocks
    std::uint64_t gross_bits = 0;  // 3*count_a + 2*count_b
    std::uint64_t net_bits = 0;    // gross minus the frame header, floored at 0

    std::uint64_t total_blocks() const { return count_a + count_b + count_pure; }

    friend bool operator==(const CapacityReport&, const CapacityReport&) = default;
};

inline CapacityReport capacity(const BinaryImage& image) {
    const GridDims g = grid_dims(image.height(), image.width());
    CapacityReport r;
    for (std::size_t br = 0; br < g.block_rows; ++br)
        for (std::size_t bc = 0; bc < g.block_cols; ++bc)
            switch (classify(detail::pattern_at(image, br * kBlockSize, bc * kBlockSize))) {
                case Category::A: ++r.count_a; break;
                case Category::B: ++r.count_b; break;
                default: ++r.count_pure; break;
            }
    r.gross_bits = 3 * r.count_a + 2 * r.count_b;
    r.net_bits = r.gross_bits > kFrameHeaderBits ? r.gross_bits - kFrameHeaderBits : 0;
    return r;
}

// Raw embedding: writes the stream with no framing, so the caller must know
// how many bits to ask for at extraction. Blocks past the end of the stream
// stay untouched.
inline BinaryImage embed_bits(BinaryImage host, const BitStream& bits) {
    const CapacityReport cap = capacity(host);
    if (bits.size() > cap.gross_bits)
        throw InsufficientCapacity("stream needs " + std::to_string(bits.size()) +
                                   " bits but the image holds " +
                                   std::to_string(cap.gross_bits));
    const GridDims g = grid_dims(host.height(), host.width());
    std::size_t next = 0;  // index of the first unconsumed bit
    for (std::size_t b = 0; b < g.total_blocks() && next < bits.size(); ++b) {
        const std::size_t row = b / g.block_cols * kBlockSize;
        const std::size_t col = b % g.block_cols * kBlockSize;
        const Category cat = classify(detail::pattern_at(host, row, col));
        if (cat == Category::PureWhite || cat == Category::PureBlack) continue;
        const unsigned width = cat == Category::A ? 3 : 2;
        unsigned group = 0;  // zero-padded when the stream ends mid-group
        for (unsigned k = 0; k < width; ++k)
            group = group << 1 | (next < bits.size() ? bits.bit_at(next++) : 0u);
        detail::put_pattern(host, row, col,
                            cat == Category::A ? encode3(group) : encode2(group));
    }
    return host;
}

namespace detail {

// Decodes one block into out; true if the block carried bits. Pure blocks
// are skipped, a two-black pattern outside the 2-bit table is corruption.
inline bool decode_block(const BinaryImage& stego, std::size_t block_row, std::size_t block_col,
                         BitStream& out) {
    const Pattern p = pattern_at(stego, block_row * kBlockSize, block_col * kBlockSize);
    const unsigned black = p.black_count();
    if (black == 0 || black == 4) return false;
    if (black == 2) {
        const auto group = try_decode2(p);
        if (!group)
            throw CorruptStream("block (" + std::to_string(block_row) + ", " +
                                std::to_string(block_col) + ") holds pattern \"" + p.str() +
                                "\" which no code table produces");
        out.append_bits(*group, 2);
    } else {
        out.append_bits(decode3(p), 3);
    }
    return true;
}

}  // namespace detail

// Raw extraction of exactly nbits, mirroring embed_bits.
inline BitStream extract_bits(const BinaryImage& stego, std::uint64_t nbits) {
    const GridDims g = grid_dims(stego.height(), stego.width());
    BitStream out;
    for (std::size_t b = 0; b < g.total_blocks() && out.size() < nbits; ++b)
        detail::decode_block(stego, b / g.block_cols, b % g.block_cols, out);
    if (out.size() < nbits)
        throw NotEnoughData("stego image yields " + std::to_string(out.size()) +
                            " bits, caller asked for " + std::to_string(nbits));
    out.truncate(nbits);
    return out;
}

inline BinaryImage embed_payload(BinaryImage host, std::span<const std::uint8_t> payload) {
    if (payload.size() >= (std::uint64_t(1) << kFrameHeaderBits) / 8)
        throw PayloadTooLarge("payload of " + std::to_string(payload.size()) +
                              " bytes does not fit a " + std::to_string(kFrameHeaderBits) +
                              "-bit length header");
    BitStream stream;
    stream.append_bits(std::uint64_t(payload.size()) * 8, kFrameHeaderBits);
    stream.append_bytes(payload);
    return embed_bits(std::move(host), stream);
}

inline std::vector<std::uint8_t> extract_payload(const BinaryImage& stego) {
    const GridDims g = grid_dims(stego.height(), stego.width());

    BitStream acc;
    std::uint64_t target = kFrameHeaderBits;
    std::uint64_t payload_bits = 0;
    bool have_header = false;
    for (std::size_t b = 0; b < g.total_blocks() && acc.size() < target; ++b) {
        detail::decode_block(stego, b / g.block_cols, b % g.block_cols, acc);
        if (!have_header && acc.size() >= kFrameHeaderBits) {
            have_header = true;
            payload_bits = acc.read_bits(kFrameHeaderBits);
            if (payload_bits % 8 != 0)
                throw NotByteAligned("header announces " + std::to_string(payload_bits) +
                                     " payload bits, not a whole number of bytes");
            target = kFrameHeaderBits + payload_bits;
        }
    }
    if (acc.size() < target) {
        // The walk ran off the grid. A known header means the announced
        // length exceeds every bit this image can yield; without one the
        // image cannot even hold a header.
        if (have_header)
            throw HeaderExceedsCapacity("header announces " + std::to_string(payload_bits) +
                                        " payload bits but the image yields only " +
                                        std::to_string(acc.size() - kFrameHeaderBits) +
                                        " after the header");
        throw NotEnoughData("stego image holds fewer than " +
                            std::to_string(kFrameHeaderBits) + " header bits");
    }

    // The cursor sits right behind the header; anything past the payload in
    // the final block group is padding and stays unread.
    std::vector<std::uint8_t> payload(payload_bits / 8);
    for (auto& byte : payload) byte = std::uint8_t(acc.read_bits(8));
    return payload;
}

}  // namespace blockhide
