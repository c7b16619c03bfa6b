#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "blockhide/errors.hpp"
#include "blockhide/image.hpp"

namespace blockhide {

// Block side length in pixels. The grid type carries it, but no other value
// is accepted anywhere.
inline constexpr std::size_t kBlockSize = 2;

// The four pixels of a 2x2 block as an ordered 4-bit code:
// bit 3 = top-left, bit 2 = top-right, bit 1 = bottom-left, bit 0 = bottom-right.
// Rendered as a string the code reads row by row, so "0111" is a black
// top-left pixel followed by three white ones.
class Pattern {
public:
    constexpr Pattern() = default;
    explicit constexpr Pattern(std::uint8_t code) : code_(code) {
        if (code > 0xF) throw std::invalid_argument("pattern code must fit in 4 bits");
    }

    static constexpr Pattern from_pixels(std::uint8_t p00, std::uint8_t p01, std::uint8_t p10,
                                         std::uint8_t p11) {
        return Pattern(std::uint8_t(p00 << 3 | p01 << 2 | p10 << 1 | p11));
    }

    static constexpr Pattern from_string(std::string_view s) {
        if (s.size() != 4) throw std::invalid_argument("pattern string must have 4 characters");
        std::uint8_t code = 0;
        for (char ch : s) {
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("pattern string must contain only 0 and 1");
            code = std::uint8_t(code << 1 | (ch == '1'));
        }
        return Pattern(code);
    }

    constexpr std::uint8_t code() const { return code_; }

    // pre: row < 2, col < 2
    constexpr std::uint8_t pixel(std::size_t row, std::size_t col) const {
        return (code_ >> (3 - (row * 2 + col))) & 1u;
    }

    constexpr unsigned black_count() const { return 4u - unsigned(std::popcount(code_)); }

    std::string str() const {
        std::string s(4, '0');
        for (std::size_t i = 0; i < 4; ++i) s[i] = char('0' + ((code_ >> (3 - i)) & 1u));
        return s;
    }

    friend constexpr bool operator==(Pattern, Pattern) = default;

private:
    std::uint8_t code_ = 0;
};

// PureWhite and PureBlack blocks never carry data. A blocks (2 black pixels)
// carry 3 bits, B blocks (1 or 3 black pixels) carry 2 bits.
enum class Category { PureWhite, PureBlack, A, B };

constexpr Category classify(Pattern p) {
    switch (p.black_count()) {
        case 0: return Category::PureWhite;
        case 4: return Category::PureBlack;
        case 2: return Category::A;
        default: return Category::B;
    }
}

struct GridDims {
    std::size_t block_rows = 0;  // floor(height / block_size)
    std::size_t block_cols = 0;  // floor(width / block_size)
    std::size_t block_size = kBlockSize;

    std::size_t total_blocks() const { return block_rows * block_cols; }

    friend constexpr bool operator==(const GridDims&, const GridDims&) = default;
};

// Remainder pixel rows and columns fall outside the grid and are never
// touched.
inline GridDims grid_dims(std::size_t height, std::size_t width, std::size_t k = kBlockSize) {
    if (k != kBlockSize)
        throw std::invalid_argument("only " + std::to_string(kBlockSize) + "x" +
                                    std::to_string(kBlockSize) + " blocks are supported");
    if (height < k || width < k)
        throw ImageTooSmall("image " + std::to_string(width) + "x" + std::to_string(height) +
                            " holds no " + std::to_string(k) + "x" + std::to_string(k) +
                            " block");
    return GridDims{height / k, width / k, k};
}

namespace detail {

inline void check_block_index(const BinaryImage& image, std::size_t block_row,
                              std::size_t block_col) {
    const GridDims g = grid_dims(image.height(), image.width());
    if (block_row >= g.block_rows || block_col >= g.block_cols)
        throw IndexOutOfGrid("block (" + std::to_string(block_row) + ", " +
                             std::to_string(block_col) + ") outside " +
                             std::to_string(g.block_rows) + "x" + std::to_string(g.block_cols) +
                             " grid");
}

// Unchecked pattern read at pixel coordinates (row, col).
inline Pattern pattern_at(const BinaryImage& image, std::size_t row, std::size_t col) {
    return Pattern::from_pixels(image.pixel(row, col), image.pixel(row, col + 1),
                                image.pixel(row + 1, col), image.pixel(row + 1, col + 1));
}

// Unchecked pattern write at pixel coordinates (row, col).
inline void put_pattern(BinaryImage& image, std::size_t row, std::size_t col, Pattern p) {
    image.set_pixel(row, col, p.pixel(0, 0));
    image.set_pixel(row, col + 1, p.pixel(0, 1));
    image.set_pixel(row + 1, col, p.pixel(1, 0));
    image.set_pixel(row + 1, col + 1, p.pixel(1, 1));
}

}  // namespace detail

inline Pattern get_block(const BinaryImage& image, std::size_t block_row, std::size_t block_col) {
    detail::check_block_index(image, block_row, block_col);
    return detail::pattern_at(image, block_row * kBlockSize, block_col * kBlockSize);
}

// Returns the image with the addressed four pixels replaced by p. Pass an
// rvalue to rewrite blocks without copying the pixel buffer.
inline BinaryImage set_block(BinaryImage image, std::size_t block_row, std::size_t block_col,
                             Pattern p) {
    detail::check_block_index(image, block_row, block_col);
    detail::put_pattern(image, block_row * kBlockSize, block_col * kBlockSize, p);
    return image;
}

}  // namespace blockhide
