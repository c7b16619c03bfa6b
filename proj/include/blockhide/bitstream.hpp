#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "blockhide/errors.hpp"

namespace blockhide {

// Append-only bit sequence with a separate read cursor. Bit order is fixed:
// within every appended byte or value the most significant bit comes first,
// and bit i of the stream lives at bit 7-(i%8) of byte i/8. Equality compares
// content only, not cursor position.
class BitStream {
public:
    BitStream() = default;

    static BitStream from_bytes(std::span<const std::uint8_t> bytes) {
        BitStream s;
        s.bytes_.assign(bytes.begin(), bytes.end());
        s.size_ = bytes.size() * 8;
        return s;
    }

    void append_bit(unsigned bit) {
        if (size_ % 8 == 0) bytes_.push_back(0);
        if (bit & 1u) bytes_.back() |= std::uint8_t(0x80u >> (size_ % 8));
        ++size_;
    }

    // Appends the low `count` bits of value, most significant first. count <= 64.
    void append_bits(std::uint64_t value, unsigned count) {
        for (unsigned i = count; i-- > 0;) append_bit(unsigned(value >> i) & 1u);
    }

    void append_bytes(std::span<const std::uint8_t> bytes) {
        for (const std::uint8_t b : bytes) append_bits(b, 8);
    }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    // pre: i < size()
    unsigned bit_at(std::size_t i) const { return (bytes_[i / 8] >> (7 - i % 8)) & 1u; }

    std::size_t cursor() const { return cursor_; }
    std::size_t remaining() const { return size_ - cursor_; }
    void reset_cursor() { cursor_ = 0; }

    unsigned read_bit() {
        if (cursor_ >= size_) throw NotEnoughData("bit stream exhausted");
        return bit_at(cursor_++);
    }

    // Reads `count` bits, most significant first. count <= 64.
    std::uint64_t read_bits(unsigned count) {
        std::uint64_t value = 0;
        for (unsigned i = 0; i < count; ++i) value = value << 1 | read_bit();
        return value;
    }

    // Keeps the first nbits; dropped bits in the last byte are cleared so
    // equality stays canonical.
    void truncate(std::size_t nbits) {
        if (nbits >= size_) return;
        size_ = nbits;
        bytes_.resize((nbits + 7) / 8);
        if (nbits % 8 != 0) bytes_.back() &= std::uint8_t(0xFFu << (8 - nbits % 8));
        if (cursor_ > size_) cursor_ = size_;
    }

    std::vector<std::uint8_t> to_bytes() const {
        if (size_ % 8 != 0)
            throw NotByteAligned("stream holds " + std::to_string(size_) +
                                 " bits, not a whole number of bytes");
        return bytes_;
    }

    std::string to_string() const {
        std::string s(size_, '0');
        for (std::size_t i = 0; i < size_; ++i) s[i] = char('0' + bit_at(i));
        return s;
    }

    friend bool operator==(const BitStream& a, const BitStream& b) {
        return a.size_ == b.size_ && a.bytes_ == b.bytes_;
    }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t size_ = 0;
    std::size_t cursor_ = 0;
};

}  // namespace blockhide
