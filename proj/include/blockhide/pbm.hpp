#pragma once

// PBM (Netpbm bitmap) reader and writer, formats P1 (ASCII) and P4 (packed).
// PBM stores 1 = black, the opposite of the in-memory convention, so pixel
// values are inverted on the way in and out. Round trips are bit-exact.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "blockhide/errors.hpp"
#include "blockhide/image.hpp"

namespace blockhide {

enum class PbmFormat { P1, P4 };

namespace detail {

inline bool is_pbm_ws(int c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class PbmScanner {
public:
    explicit PbmScanner(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    bool eof() const { return pos_ >= bytes_.size(); }
    int peek() const { return eof() ? -1 : bytes_[pos_]; }
    int next() { return eof() ? -1 : bytes_[pos_++]; }

    // Whitespace and '#'-to-end-of-line comments, any amount of either.
    void skip_ws_and_comments() {
        while (!eof()) {
            if (is_pbm_ws(peek())) {
                ++pos_;
            } else if (peek() == '#') {
                while (!eof() && peek() != '\n') ++pos_;
            } else {
                return;
            }
        }
    }

    std::size_t read_dimension(const char* what) {
        skip_ws_and_comments();
        if (eof() || peek() < '0' || peek() > '9')
            throw MalformedHeader(std::string("expected ") + what + " in PBM header");
        std::size_t value = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            value = value * 10 + std::size_t(next() - '0');
            if (value > kMaxDimension)
                throw MalformedHeader(std::string(what) + " out of range");
        }
        return value;
    }

    std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

    static constexpr std::size_t kMaxDimension = 1u << 26;

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline BinaryImage load_pbm(std::span<const std::uint8_t> bytes) {
    detail::PbmScanner in(bytes);
    const int magic0 = in.next();
    const int magic1 = in.next();
    if (magic0 != 'P' || (magic1 != '1' && magic1 != '4'))
        throw MalformedHeader("not a PBM file (magic must be P1 or P4)");
    const bool packed = magic1 == '4';

    const std::size_t width = in.read_dimension("width");
    const std::size_t height = in.read_dimension("height");
    if (width == 0 || height == 0)
        throw MalformedHeader("PBM dimensions must be at least 1x1");

    std::vector<std::uint8_t> pixels;
    pixels.reserve(width * height);

    if (!packed) {
        // P1: each '0'/'1' character is one pixel, whitespace optional.
        while (pixels.size() < width * height) {
            in.skip_ws_and_comments();
            const int c = in.next();
            if (c < 0)
                throw TruncatedData("P1 raster ended after " + std::to_string(pixels.size()) +
                                    " of " + std::to_string(width * height) + " pixels");
            if (c != '0' && c != '1')
                throw InvalidToken(std::string("P1 raster contains '") + char(c) +
                                   "', expected 0 or 1");
            pixels.push_back(c == '1' ? kBlack : kWhite);
        }
    } else {
        // P4: a single whitespace byte after the height, then packed rows.
        // Rows are padded to whole bytes; bit 7 of each byte comes first.
        if (!detail::is_pbm_ws(in.peek()))
            throw MalformedHeader("P4 header must end with a whitespace character");
        in.next();
        const auto data = in.rest();
        const std::size_t bytes_per_row = (width + 7) / 8;
        if (data.size() < bytes_per_row * height)
            throw TruncatedData("P4 raster holds " + std::to_string(data.size()) +
                                " bytes, needs " + std::to_string(bytes_per_row * height));
        for (std::size_t r = 0; r < height; ++r) {
            const std::uint8_t* row = data.data() + r * bytes_per_row;
            for (std::size_t c = 0; c < width; ++c) {
                const unsigned bit = (row[c / 8] >> (7 - c % 8)) & 1u;
                pixels.push_back(bit ? kBlack : kWhite);
            }
        }
    }
    return BinaryImage::from_pixels(width, height, std::move(pixels));
}

inline std::vector<std::uint8_t> save_pbm(const BinaryImage& image, PbmFormat format) {
    std::string header = format == PbmFormat::P1 ? "P1\n" : "P4\n";
    header += std::to_string(image.width()) + " " + std::to_string(image.height()) + "\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());

    if (format == PbmFormat::P1) {
        // One image row per line, wrapped so no line passes 70 characters.
        constexpr std::size_t kTokensPerLine = 35;
        for (std::size_t r = 0; r < image.height(); ++r) {
            for (std::size_t c = 0; c < image.width(); ++c) {
                out.push_back(image.pixel(r, c) == kBlack ? '1' : '0');
                const bool line_break = c + 1 == image.width() || (c + 1) % kTokensPerLine == 0;
                out.push_back(line_break ? '\n' : ' ');
            }
        }
    } else {
        const std::size_t bytes_per_row = (image.width() + 7) / 8;
        for (std::size_t r = 0; r < image.height(); ++r) {
            std::size_t base = out.size();
            out.insert(out.end(), bytes_per_row, 0);
            for (std::size_t c = 0; c < image.width(); ++c)
                if (image.pixel(r, c) == kBlack)
                    out[base + c / 8] |= std::uint8_t(0x80u >> (c % 8));
        }
    }
    return out;
}

inline BinaryImage load_pbm_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw Error("failed reading " + path.string());
    return load_pbm(bytes);
}

inline void save_pbm_file(const BinaryImage& image, PbmFormat format,
                          const std::filesystem::path& path) {
    const auto bytes = save_pbm(image, format);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("failed writing " + path.string());
}

}  // namespace blockhide
