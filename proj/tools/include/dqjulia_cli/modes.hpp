#pragma once

#include "dqjulia/render.hpp"
#include "dqjulia/voxel.hpp"
#include "dqjulia_cli/run_config.hpp"

namespace dqjulia::cli {

SceneParams scene_from(const RunConfig& config);
Camera camera_from(const RunConfig& config);
MarchParams march_from(const RunConfig& config);
Material material_from(const RunConfig& config);
Light light_from(const RunConfig& config);
RenderOptions render_options_from(const RunConfig& config);
VoxelGridConfig voxel_config_from(const RunConfig& config);

// Render the configured scene and write one PPM to config.output.
void run_render(const RunConfig& config);

// Voxelize the configured scene and write one mesh document to config.output.
void run_voxel(const RunConfig& config);

} // namespace dqjulia::cli
