#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace dqjulia {

// Linear-light RGB channel triple, pre-quantization. Values are meaningful
// in [0, 1]; shading clamps before returning.
struct Color3 {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
};

constexpr double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

// Row-major 8-bit RGB raster, top-left origin.
struct ImageBuffer {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // 3 bytes per pixel

    static ImageBuffer allocate(int w, int h) {
        return {w, h, std::vector<std::uint8_t>(static_cast<size_t>(w) * static_cast<size_t>(h) * 3u)};
    }

    std::uint8_t* pixel(int x, int y) {
        return pixels.data() + (static_cast<size_t>(y) * static_cast<size_t>(width) + static_cast<size_t>(x)) * 3u;
    }
    const std::uint8_t* pixel(int x, int y) const {
        return pixels.data() + (static_cast<size_t>(y) * static_cast<size_t>(width) + static_cast<size_t>(x)) * 3u;
    }
};

inline std::uint8_t quantize_channel(double c, bool gamma_correct, double gamma) {
    c = clamp01(c);
    if (gamma_correct) {
        c = std::pow(c, 1.0 / gamma);
    }
    return static_cast<std::uint8_t>(std::lround(255.0 * c));
}

} // namespace dqjulia
