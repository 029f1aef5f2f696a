#include "dqjulia_cli/sweep.hpp"

#include <cstdio>
#include <filesystem>

#include "dqjulia_cli/modes.hpp"
#include "dqjulia_cli/ppm.hpp"

namespace dqjulia::cli {

DualQuaternion draw_constant(SplitMix64& rng) {
    DualQuaternion c;
    c.real.s = rng.signed_unit();
    c.real.x = rng.signed_unit();
    c.real.y = rng.signed_unit();
    c.real.z = rng.signed_unit();
    c.dual.s = rng.signed_unit();
    c.dual.x = rng.signed_unit();
    c.dual.y = rng.signed_unit();
    c.dual.z = rng.signed_unit();
    return c;
}

std::string sweep_filename(int index, const DualQuaternion& c) {
    char buffer[160];
    std::snprintf(buffer, sizeof(buffer),
                  "sweep_%03d_c=(%.2f,%.2f,%.2f,%.2f)(%.2f,%.2f,%.2f,%.2f).ppm", index, c.real.s,
                  c.real.x, c.real.y, c.real.z, c.dual.s, c.dual.x, c.dual.y, c.dual.z);
    return buffer;
}

std::vector<std::string> run_sweep(const RunConfig& config) {
    std::filesystem::create_directories(config.output);

    SplitMix64 rng(config.seed);
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(config.count));

    for (int i = 0; i < config.count; ++i) {
        const DualQuaternion c = draw_constant(rng);

        RunConfig current = config;
        current.c = {c.real.s, c.real.x, c.real.y, c.real.z, c.dual.s, c.dual.x, c.dual.y, c.dual.z};

        const ImageBuffer image =
            render(scene_from(current), camera_from(current), march_from(current),
                   material_from(current), light_from(current), render_options_from(current));

        const std::string name = sweep_filename(i, c);
        write_ppm(image, (std::filesystem::path(config.output) / name).string());
        names.push_back(name);
    }
    return names;
}

} // namespace dqjulia::cli
