#include "dqjulia_cli/modes.hpp"

#include <fstream>
#include <stdexcept>

#include "dqjulia_cli/ppm.hpp"

namespace dqjulia::cli {

SceneParams scene_from(const RunConfig& config) {
    SceneParams scene;
    scene.c = {{config.c[0], config.c[1], config.c[2], config.c[3]},
               {config.c[4], config.c[5], config.c[6], config.c[7]}};
    scene.slice = make_slice(config.slice_map, config.slice_constants);
    scene.iter.max_iterations = config.iterations;
    scene.iter.escape_radius = config.escape_radius;
    scene.iter.squaring_mode = config.squaring_mode == "clifford" ? SquaringMode::CliffordExact
                                                                  : SquaringMode::PaperComponentwise;
    scene.de_variant = config.de_variant == "alpha" ? DeVariant::RatioAlpha : DeVariant::HartLog;
    scene.alpha = config.alpha;
    return scene;
}

Camera camera_from(const RunConfig& config) {
    Camera camera;
    camera.position = {config.camera_pos[0], config.camera_pos[1], config.camera_pos[2]};
    camera.look_at = {config.look_at[0], config.look_at[1], config.look_at[2]};
    camera.up = {config.up[0], config.up[1], config.up[2]};
    camera.vertical_fov_deg = config.fov;
    camera.width = config.width;
    camera.height = config.height;
    return camera;
}

MarchParams march_from(const RunConfig& config) {
    MarchParams march;
    march.hit_epsilon = config.epsilon;
    march.max_steps = config.max_steps;
    march.bounding_sphere_radius = config.bounding_radius;
    march.max_ray_distance = config.max_ray_distance;
    march.use_bounding_sphere = !config.no_bounding_sphere;
    return march;
}

Material material_from(const RunConfig& config) {
    Material material;
    material.k_ambient = config.ka;
    material.k_diffuse = config.kd;
    material.k_specular = config.ks;
    material.specular_exponent = config.specular_exp;
    material.base_color = {config.color[0], config.color[1], config.color[2]};
    return material;
}

Light light_from(const RunConfig& config) {
    Light light;
    light.direction = normalized({config.light_dir[0], config.light_dir[1], config.light_dir[2]});
    light.intensity_ambient = config.ia;
    light.intensity_diffuse = config.id;
    light.intensity_specular = config.is;
    return light;
}

RenderOptions render_options_from(const RunConfig& config) {
    RenderOptions options;
    options.background = {config.background[0], config.background[1], config.background[2]};
    options.gamma_correct = !config.no_gamma;
    options.workers = config.workers;
    return options;
}

VoxelGridConfig voxel_config_from(const RunConfig& config) {
    VoxelGridConfig grid;
    grid.resolution = config.resolution;
    grid.bounds_min = {-config.bounds, -config.bounds, -config.bounds};
    grid.bounds_max = {config.bounds, config.bounds, config.bounds};
    grid.workers = config.workers;
    return grid;
}

void run_render(const RunConfig& config) {
    const ImageBuffer image = render(scene_from(config), camera_from(config), march_from(config),
                                     material_from(config), light_from(config),
                                     render_options_from(config));
    write_ppm(image, config.output);
}

void run_voxel(const RunConfig& config) {
    const VoxelGrid grid = voxelize(scene_from(config), voxel_config_from(config));
    const std::string mesh = export_mesh(grid);

    std::ofstream out(config.output, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + config.output + "' for writing");
    }
    out.write(mesh.data(), static_cast<std::streamsize>(mesh.size()));
    out.flush();
    if (!out) {
        throw std::runtime_error("failed while writing '" + config.output + "'");
    }
}

} // namespace dqjulia::cli
