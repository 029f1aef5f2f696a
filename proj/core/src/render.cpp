#include "dqjulia/render.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

namespace dqjulia {

Ray generate_ray(const Camera& camera, int px, int py) {
    const Vec3 forward = normalized(camera.look_at - camera.position);
    const Vec3 right = normalized(cross(forward, camera.up));
    const Vec3 up = cross(right, forward);

    const double half_height = std::tan(0.5 * camera.vertical_fov_deg * std::numbers::pi / 180.0);
    const double aspect = static_cast<double>(camera.width) / static_cast<double>(camera.height);

    const double u = ((px + 0.5) / camera.width * 2.0 - 1.0) * aspect * half_height;
    const double v = (1.0 - (py + 0.5) / camera.height * 2.0) * half_height;

    return {camera.position, normalized(forward + u * right + v * up)};
}

std::optional<SphereSpan> intersect_bounding_sphere(const Ray& ray, double radius) {
    const double b = dot(ray.origin, ray.direction);
    const double c = dot(ray.origin, ray.origin) - radius * radius;
    const double disc = b * b - c;
    if (disc < 0.0) {
        return std::nullopt;
    }
    const double root = std::sqrt(disc);
    double t_near = -b - root;
    const double t_far = -b + root;
    if (t_far < 0.0) {
        return std::nullopt;  // entirely behind the ray
    }
    if (t_near < 0.0) {
        t_near = 0.0;
    }
    return SphereSpan{t_near, t_far};
}

Hit ray_march(const Ray& ray, const SceneParams& scene, const MarchParams& march,
              std::vector<MarchStep>* trace) {
    double t = 0.0;
    double t_limit = march.max_ray_distance;

    // The estimator is only trustworthy near the set, so steps taken outside
    // the configured sphere are clamped to land on its entry point. The
    // culling flag adds the discard of non-intersecting rays and the far
    // exit; with or without it, the samples inside the sphere are identical.
    double entry = -1.0;
    if (march.bounding_sphere_radius > 0.0) {
        const auto span = intersect_bounding_sphere(ray, march.bounding_sphere_radius);
        if (march.use_bounding_sphere) {
            if (!span) {
                return {};
            }
            t_limit = std::min(t_limit, span->t_far);
        }
        if (span) {
            entry = span->t_near;
        }
    }

    Hit result;
    for (int step = 1; step <= march.max_steps; ++step) {
        const Vec3 p = ray.origin + t * ray.direction;
        const double estimate = distance_estimate(p, scene);
        if (trace) {
            trace->push_back({p, t, estimate});
        }
        result.steps_taken = step;
        if (estimate < march.hit_epsilon) {
            result.hit = true;
            result.point = p;
            result.distance_along_ray = t;
            return result;
        }
        double advance = estimate;
        if (t < entry) {
            advance = std::min(advance, entry - t);
        }
        t += advance;
        if (t > t_limit) {
            return result;
        }
    }
    return result;
}

NormalEstimate estimate_normal(const Vec3& p, const SceneParams& scene, double h) {
    const double inv = 1.0 / (2.0 * h);  // signed, so the direction is independent of sign(h)
    const Vec3 gradient = inv * Vec3{
        distance_estimate({p.x + h, p.y, p.z}, scene) - distance_estimate({p.x - h, p.y, p.z}, scene),
        distance_estimate({p.x, p.y + h, p.z}, scene) - distance_estimate({p.x, p.y - h, p.z}, scene),
        distance_estimate({p.x, p.y, p.z + h}, scene) - distance_estimate({p.x, p.y, p.z - h}, scene),
    };
    if (dot(gradient, gradient) == 0.0) {
        return {Vec3{}, true};
    }
    return {normalized(gradient), false};
}

Color3 shade_phong(const Hit& hit, const Vec3& normal, const Material& material,
                   const Light& light, const Vec3& eye) {
    const Vec3 l = light.direction;
    const double n_dot_l_raw = dot(normal, l);
    const double n_dot_l = std::max(0.0, n_dot_l_raw);

    const Vec3 reflected = 2.0 * n_dot_l_raw * normal - l;
    const Vec3 view = normalized(eye - hit.point);
    const double r_dot_v = std::max(0.0, dot(reflected, view));

    const double ambient = material.k_ambient * light.intensity_ambient;
    const double diffuse = material.k_diffuse * light.intensity_diffuse * n_dot_l;
    const double specular =
        material.k_specular * light.intensity_specular * std::pow(r_dot_v, material.specular_exponent);

    const Color3 base = material.base_color;
    return {
        clamp01(base.r * (ambient + diffuse) + specular),
        clamp01(base.g * (ambient + diffuse) + specular),
        clamp01(base.b * (ambient + diffuse) + specular),
    };
}

namespace {

void render_row(int y, const SceneParams& scene, const Camera& camera, const MarchParams& march,
                const Material& material, const Light& light, const RenderOptions& options,
                ImageBuffer& img) {
    for (int x = 0; x < camera.width; ++x) {
        const Ray ray = generate_ray(camera, x, y);
        Hit hit = ray_march(ray, scene, march);

        Color3 color = options.background;
        if (hit.hit) {
            const NormalEstimate n = estimate_normal(hit.point, scene, options.normal_offset);
            Vec3 normal = n.normal;
            if (n.degenerate) {
                normal = -ray.direction;
                hit.normal_fallback = true;
            }
            color = shade_phong(hit, normal, material, light, camera.position);
        }

        std::uint8_t* px = img.pixel(x, y);
        px[0] = quantize_channel(color.r, options.gamma_correct, options.gamma);
        px[1] = quantize_channel(color.g, options.gamma_correct, options.gamma);
        px[2] = quantize_channel(color.b, options.gamma_correct, options.gamma);
    }
}

} // namespace

ImageBuffer render(const SceneParams& scene, const Camera& camera, const MarchParams& march,
                   const Material& material, const Light& light, const RenderOptions& options) {
    ImageBuffer img = ImageBuffer::allocate(camera.width, camera.height);

    const int workers = std::clamp(options.workers, 1, camera.height);
    if (workers == 1) {
        for (int y = 0; y < camera.height; ++y) {
            render_row(y, scene, camera, march, material, light, options, img);
        }
        return img;
    }

    // Dynamic row scheduling; every row's pixels depend only on the row, so
    // the raster is byte-identical regardless of which worker takes which row.
    std::atomic<int> next_row{0};
    auto work = [&] {
        for (;;) {
            const int y = next_row.fetch_add(1, std::memory_order_relaxed);
            if (y >= camera.height) {
                return;
            }
            render_row(y, scene, camera, march, material, light, options, img);
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int i = 0; i < workers; ++i) {
        pool.emplace_back(work);
    }
    for (auto& t : pool) {
        t.join();
    }
    return img;
}

} // namespace dqjulia
