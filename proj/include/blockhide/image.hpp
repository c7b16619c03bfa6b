#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blockhide/errors.hpp"

namespace blockhide {

// Pixel values. Everything in memory uses 0 = black, 1 = white.
inline constexpr std::uint8_t kBlack = 0;
inline constexpr std::uint8_t kWhite = 1;

// A rectangular binary image, row-major, one byte per pixel.
// Treat a fully built image as immutable: producers mutate their own copy
// and hand out const references, so concurrent readers need no locking.
class BinaryImage {
public:
    BinaryImage(std::size_t width, std::size_t height, std::uint8_t fill = kWhite)
        : width_(width), height_(height) {
        check_dims(width, height);
        check_value(fill);
        pixels_.assign(width * height, fill);
    }

    static BinaryImage from_pixels(std::size_t width, std::size_t height,
                                   std::vector<std::uint8_t> pixels) {
        check_dims(width, height);
        if (pixels.size() != width * height)
            throw std::invalid_argument("pixel count " + std::to_string(pixels.size()) +
                                        " does not match " + std::to_string(width) + "x" +
                                        std::to_string(height));
        for (std::uint8_t v : pixels) check_value(v);
        BinaryImage img(width, height);
        img.pixels_ = std::move(pixels);
        return img;
    }

    std::size_t width() const { return width_; }
    std::size_t height() const { return height_; }
    std::size_t pixel_count() const { return width_ * height_; }

    // pre: row < height(), col < width()
    std::uint8_t pixel(std::size_t row, std::size_t col) const {
        return pixels_[row * width_ + col];
    }
    void set_pixel(std::size_t row, std::size_t col, std::uint8_t value) {
        check_value(value);
        pixels_[row * width_ + col] = value;
    }

    std::span<const std::uint8_t> pixels() const { return pixels_; }

    bool operator==(const BinaryImage&) const = default;

private:
    static void check_dims(std::size_t w, std::size_t h) {
        if (w == 0 || h == 0)
            throw std::invalid_argument("image dimensions must be at least 1x1");
        if (w > std::numeric_limits<std::size_t>::max() / h)
            throw std::invalid_argument("image dimensions overflow");
    }
    static void check_value(std::uint8_t v) {
        if (v > 1) throw std::invalid_argument("pixel value must be 0 or 1");
    }

    std::size_t width_ = 0;
    std::size_t height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

// Number of pixel positions at which a and b differ.
inline std::size_t flip_count(const BinaryImage& a, const BinaryImage& b) {
    if (a.width() != b.width() || a.height() != b.height())
        throw DimensionMismatch("cannot compare " + std::to_string(a.width()) + "x" +
                                std::to_string(a.height()) + " with " +
                                std::to_string(b.width()) + "x" + std::to_string(b.height()));
    const auto pa = a.pixels();
    const auto pb = b.pixels();
    std::size_t flips = 0;
    for (std::size_t i = 0; i < pa.size(); ++i) flips += pa[i] != pb[i];
    return flips;
}

}  // namespace blockhide
