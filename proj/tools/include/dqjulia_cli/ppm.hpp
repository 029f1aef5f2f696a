#pragma once

#include <string>

#include "dqjulia/image.hpp"

namespace dqjulia::cli {

// Binary PPM (P6): "P6\n<width> <height>\n255\n" followed by the raw RGB
// bytes, row-major from the top-left. Bit-exact for a given buffer.
std::string encode_ppm(const ImageBuffer& image);

// Throws std::runtime_error naming the path on I/O failure.
void write_ppm(const ImageBuffer& image, const std::string& path);

} // namespace dqjulia::cli
