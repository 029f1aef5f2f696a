#include "dqjulia_cli/ppm.hpp"

#include <fstream>
#include <stdexcept>

namespace dqjulia::cli {

std::string encode_ppm(const ImageBuffer& image) {
    std::string out = "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) +
                       "\n255\n";
    out.append(reinterpret_cast<const char*>(image.pixels.data()), image.pixels.size());
    return out;
}

void write_ppm(const ImageBuffer& image, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    const std::string bytes = encode_ppm(image);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
        throw std::runtime_error("failed while writing '" + path + "'");
    }
}

} // namespace dqjulia::cli
