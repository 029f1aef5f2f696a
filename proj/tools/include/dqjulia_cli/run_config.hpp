#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dqjulia/julia.hpp"

namespace dqjulia::cli {

enum class RunMode { Render, Voxel, Sweep };

// Fully resolved run configuration. Precedence while building one:
// compiled defaults, then DQJULIA_WORKERS for the worker count, then the
// --config document, then command-line flags. After parsing, workers >= 1
// and output is non-empty.
struct RunConfig {
    RunMode mode = RunMode::Render;

    // scene: the constant's eight values are real (s,x,y,z) then dual (s,x,y,z)
    std::array<double, 8> c{-0.04, 0.95, 0.4, -0.43, 0.09, -0.35, -0.27, -0.31};
    std::string slice_map = "real-sxy";
    std::array<double, 5> slice_constants{};
    int iterations = 10;
    double escape_radius = 4.0;
    std::string squaring_mode = "paper";  // paper | clifford
    std::string de_variant = "hart";      // hart | alpha
    double alpha = 0.05;

    // camera
    std::array<double, 3> camera_pos{0.0, 0.0, -3.4};
    std::array<double, 3> look_at{0.0, 0.0, 0.0};
    std::array<double, 3> up{0.0, 1.0, 0.0};
    double fov = 50.0;
    int width = 512;
    int height = 512;

    // marching
    double epsilon = 1e-4;
    int max_steps = 256;
    double bounding_radius = 3.0;
    double max_ray_distance = 100.0;
    bool no_bounding_sphere = false;

    // material and light
    double ka = 0.1;
    double kd = 0.7;
    double ks = 0.3;
    double specular_exp = 32.0;
    double ia = 1.0;
    double id = 1.0;
    double is = 1.0;
    std::array<double, 3> light_dir{1.0, 2.0, -1.0};
    std::array<double, 3> color{0.82, 0.88, 0.94};
    std::array<double, 3> background{0.0, 0.0, 0.0};
    bool no_gamma = false;

    // voxel grid
    int resolution = 50;
    double bounds = 1.5;  // half extent of the cubic grid

    // run control
    std::uint64_t seed = 1;
    int count = 6;
    int workers = 0;     // 0 = unresolved
    std::string output;  // "" = unresolved, filled per mode
    bool dump_config = false;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct ParseOutcome {
    enum class Kind { Ok, Help, Error };
    Kind kind = Kind::Ok;
    RunConfig config;
    std::string message;  // error text, or help text for Kind::Help
};

// args excludes the program name. Flags are "--name value" or "--name=value";
// booleans take no value on the command line.
ParseOutcome parse_command_line(const std::vector<std::string>& args);

// The flat "key = value" config document mirroring the flag names, in a
// fixed order; parse_command_line({"--config", path}) of a dumped document
// reproduces the identical RunConfig.
std::string dump_config_document(const RunConfig& config);

std::string usage_text();

// Slice assembly from a named slot map plus the five fixed values, assigned
// to the non-point slots in component order.
SliceConfig make_slice(const std::string& map_name, const std::array<double, 5>& constants);

} // namespace dqjulia::cli
