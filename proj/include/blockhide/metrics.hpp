#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>

#include "blockhide/engine.hpp"
#include "blockhide/errors.hpp"
#include "blockhide/image.hpp"

namespace blockhide {

// Metric scale: black maps to 0, white to 255, peak signal 255. Capacity and
// the codec never see this scale; it exists only for MSE/PSNR.
inline constexpr double kMetricPeak = 255.0;

namespace detail {

inline void require_same_dims(const BinaryImage& a, const BinaryImage& b) {
    if (a.width() != b.width() || a.height() != b.height())
        throw DimensionMismatch("cannot compare " + std::to_string(a.width()) + "x" +
                                std::to_string(a.height()) + " with " +
                                std::to_string(b.width()) + "x" + std::to_string(b.height()));
}

}  // namespace detail

// Mean square error over pixels scaled to {0, 255}, summed literally.
inline double mse(const BinaryImage& original, const BinaryImage& stego) {
    detail::require_same_dims(original, stego);
    const auto a = original.pixels();
    const auto b = stego.pixels();
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::int64_t diff = std::int64_t(a[i]) * 255 - std::int64_t(b[i]) * 255;
        sum += std::uint64_t(diff * diff);
    }
    return double(sum) / double(original.pixel_count());
}

// 10*log10(255^2 / MSE); +infinity for identical images. With binary pixels
// this equals 10*log10(pixel_count / flips).
inline double psnr(const BinaryImage& original, const BinaryImage& stego) {
    const double m = mse(original, stego);
    if (m == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(kMetricPeak * kMetricPeak / m);
}

struct AnalysisReport {
    std::size_t flips = 0;
    double mse = 0.0;
    double psnr_db = 0.0;            // +infinity when flips == 0
    CapacityReport capacity;         // census of the original image
    std::size_t blocks_changed = 0;  // grid blocks whose pattern differs; a
                                     // lower bound on blocks rewritten
};

inline AnalysisReport analyze(const BinaryImage& original, const BinaryImage& stego) {
    detail::require_same_dims(original, stego);
    AnalysisReport r;
    r.flips = flip_count(original, stego);
    r.mse = mse(original, stego);
    r.psnr_db = r.mse == 0.0 ? std::numeric_limits<double>::infinity()
                             : 10.0 * std::log10(kMetricPeak * kMetricPeak / r.mse);
    r.capacity = capacity(original);
    const GridDims g = grid_dims(original.height(), original.width());
    for (std::size_t br = 0; br < g.block_rows; ++br)
        for (std::size_t bc = 0; bc < g.block_cols; ++bc)
            r.blocks_changed += detail::pattern_at(original, br * kBlockSize, bc * kBlockSize) !=
                                detail::pattern_at(stego, br * kBlockSize, bc * kBlockSize);
    return r;
}

namespace detail {

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace detail

// Machine-readable key=value lines, one field per line.
inline std::string format_report_kv(const AnalysisReport& r) {
    std::string out;
    out += "flips=" + std::to_string(r.flips) + "\n";
    out += "mse=" + detail::fmt_double(r.mse) + "\n";
    out += "psnr_db=" + detail::fmt_double(r.psnr_db) + "\n";
    out += "count_a=" + std::to_string(r.capacity.count_a) + "\n";
    out += "count_b=" + std::to_string(r.capacity.count_b) + "\n";
    out += "count_pure=" + std::to_string(r.capacity.count_pure) + "\n";
    out += "gross_bits=" + std::to_string(r.capacity.gross_bits) + "\n";
    out += "net_bits=" + std::to_string(r.capacity.net_bits) + "\n";
    out += "blocks_changed=" + std::to_string(r.blocks_changed) + "\n";
    return out;
}

// Human-readable summary.
inline std::string format_report_text(const AnalysisReport& r) {
    std::string out;
    out += "pixels flipped   " + std::to_string(r.flips) + "\n";
    out += "mse              " + detail::fmt_double(r.mse) + "\n";
    out += "psnr (dB)        " + detail::fmt_double(r.psnr_db) + "\n";
    out += "blocks A/B/pure  " + std::to_string(r.capacity.count_a) + "/" +
           std::to_string(r.capacity.count_b) + "/" + std::to_string(r.capacity.count_pure) +
           "\n";
    out += "capacity (bits)  " + std::to_string(r.capacity.gross_bits) + " gross, " +
           std::to_string(r.capacity.net_bits) + " net\n";
    out += "blocks changed   " + std::to_string(r.blocks_changed) + "\n";
    return out;
}

}  // namespace blockhide
