#pragma once

#include <optional>
#include <vector>

#include "dqjulia/image.hpp"
#include "dqjulia/julia.hpp"
#include "dqjulia/vec3.hpp"

namespace dqjulia {

// Pinhole camera. position != look_at, up not parallel to the view
// direction, vertical_fov_deg in (0, 180).
struct Camera {
    Vec3 position{0.0, 0.0, -4.0};
    Vec3 look_at{0.0, 0.0, 0.0};
    Vec3 up{0.0, 1.0, 0.0};
    double vertical_fov_deg = 60.0;
    int width = 512;
    int height = 512;
};

struct Ray {
    Vec3 origin;
    Vec3 direction;  // unit length
};

struct SphereSpan {
    double t_near = 0.0;
    double t_far = 0.0;
};

struct MarchParams {
    double hit_epsilon = 1e-4;
    int max_steps = 256;
    double bounding_sphere_radius = 3.0;
    double max_ray_distance = 100.0;
    bool use_bounding_sphere = true;
};

struct Material {
    double k_ambient = 0.1;
    double k_diffuse = 0.7;
    double k_specular = 0.3;
    double specular_exponent = 32.0;
    Color3 base_color{1.0, 1.0, 1.0};
};

struct Light {
    Vec3 direction = normalized(Vec3{1.0, 2.0, -1.0});  // unit vector from surface toward the light
    double intensity_ambient = 1.0;
    double intensity_diffuse = 1.0;
    double intensity_specular = 1.0;
};

struct Hit {
    bool hit = false;
    Vec3 point;
    int steps_taken = 0;
    double distance_along_ray = 0.0;
    bool normal_fallback = false;  // set when the gradient degenerated and -ray.direction was used
};

// One sample of an instrumented march: position, cumulative t, local estimate.
struct MarchStep {
    Vec3 point;
    double t = 0.0;
    double estimate = 0.0;
};

struct NormalEstimate {
    Vec3 normal;
    bool degenerate = false;
};

struct RenderOptions {
    Color3 background{0.0, 0.0, 0.0};
    bool gamma_correct = true;
    double gamma = 2.2;
    double normal_offset = 1e-3;
    int workers = 1;
};

// Ray through the center of pixel (px, py); |direction| = 1.
Ray generate_ray(const Camera& camera, int px, int py);

// Entry/exit parameters against a sphere of the given radius centered at the
// origin. t_near is clamped to 0 for rays starting inside. Empty when the
// ray misses or the sphere is entirely behind the origin.
std::optional<SphereSpan> intersect_bounding_sphere(const Ray& ray, double radius);

// Sphere-trace the distance-estimate field. Steps by the local estimate,
// clamped so the march lands on the bounding-sphere entry instead of leaping
// past it from outside. Reports a hit when the estimate drops below
// hit_epsilon, a miss when the ray leaves the bounded range or the step
// budget runs out. With use_bounding_sphere set, rays that miss the sphere
// are discarded up front and the march ends at the sphere exit; the samples
// taken inside the sphere do not depend on that flag.
Hit ray_march(const Ray& ray, const SceneParams& scene, const MarchParams& march,
              std::vector<MarchStep>* trace = nullptr);

// Central-difference gradient of the distance-estimate field, normalized.
// Degenerate (exactly zero) gradients are flagged; the caller substitutes
// the negated ray direction.
NormalEstimate estimate_normal(const Vec3& p, const SceneParams& scene, double h = 1e-3);

// Single-light Phong: ambient + diffuse + specular, with both dot products
// clamped to >= 0 and the result clamped to [0, 1] per channel.
Color3 shade_phong(const Hit& hit, const Vec3& normal, const Material& material,
                   const Light& light, const Vec3& eye);

// Full raster. Rows are distributed over a worker pool; each worker writes
// only its own rows, so output bytes are independent of the worker count.
ImageBuffer render(const SceneParams& scene, const Camera& camera, const MarchParams& march,
                   const Material& material, const Light& light, const RenderOptions& options = {});

} // namespace dqjulia
