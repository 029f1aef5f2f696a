#include "dqjulia_cli/run_config.hpp"

#include <cctype>
#include <cerrno>
#include <climits>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

namespace dqjulia::cli {

namespace {

using SetError = std::optional<std::string>;

SetError parse_double_value(const std::string& text, double& out) {
    if (text.empty()) {
        return "expected a number, got an empty value";
    }
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(value)) {
        return "expected a finite number, got '" + text + "'";
    }
    out = value;
    return std::nullopt;
}

SetError parse_int_value(const std::string& text, int& out) {
    if (text.empty()) {
        return "expected an integer, got an empty value";
    }
    errno = 0;
    char* end = nullptr;
    const long long value = std::strtoll(text.c_str(), &end, 10);
    if (end != text.c_str() + text.size() || errno == ERANGE || value < INT_MIN || value > INT_MAX) {
        return "expected an integer, got '" + text + "'";
    }
    out = static_cast<int>(value);
    return std::nullopt;
}

SetError parse_u64_value(const std::string& text, std::uint64_t& out) {
    if (text.empty() || text[0] == '-') {
        return "expected an unsigned integer, got '" + text + "'";
    }
    errno = 0;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(text.c_str(), &end, 10);
    if (end != text.c_str() + text.size() || errno == ERANGE) {
        return "expected an unsigned integer, got '" + text + "'";
    }
    out = value;
    return std::nullopt;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (const char ch : text) {
        if (ch == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    parts.push_back(current);
    return parts;
}

template <size_t N>
SetError parse_double_list(const std::string& text, std::array<double, N>& out) {
    const std::vector<std::string> parts = split_commas(text);
    if (parts.size() != N) {
        return "expected " + std::to_string(N) + " comma-separated numbers, got " +
               std::to_string(parts.size());
    }
    for (size_t i = 0; i < N; ++i) {
        if (SetError err = parse_double_value(parts[i], out[i])) {
            return err;
        }
    }
    return std::nullopt;
}

SetError parse_bool_value(const std::string& text, bool& out) {
    if (text == "true" || text == "1") {
        out = true;
        return std::nullopt;
    }
    if (text == "false" || text == "0") {
        out = false;
        return std::nullopt;
    }
    return "expected true or false, got '" + text + "'";
}

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

template <size_t N>
std::string format_double_list(const std::array<double, N>& values) {
    std::string out;
    for (size_t i = 0; i < N; ++i) {
        if (i) {
            out += ',';
        }
        out += format_double(values[i]);
    }
    return out;
}

const char* mode_name(RunMode mode) {
    switch (mode) {
    case RunMode::Render: return "render";
    case RunMode::Voxel: return "voxel";
    default: return "sweep";
    }
}

bool known_slice_map(const std::string& name) {
    return name == "real-sxy" || name == "real-xyz" || name == "dual-sxy" || name == "dual-xyz";
}

struct FlagSpec {
    const char* name;
    bool takes_value;
    std::function<SetError(RunConfig&, const std::string&)> set;
    std::function<std::string(const RunConfig&)> get;
    const char* help;
    bool in_document = true;  // action flags stay out of dumped documents
};

const std::vector<FlagSpec>& flag_table() {
    static const std::vector<FlagSpec> table = {
        {"mode", true,
         [](RunConfig& c, const std::string& v) -> SetError {
             if (v == "render") {
                 c.mode = RunMode::Render;
             } else if (v == "voxel") {
                 c.mode = RunMode::Voxel;
             } else if (v == "sweep") {
                 c.mode = RunMode::Sweep;
             } else {
                 return "expected render, voxel or sweep, got '" + v + "'";
             }
             return std::nullopt;
         },
         [](const RunConfig& c) { return std::string(mode_name(c.mode)); },
         "run mode: render | voxel | sweep (default render)"},
        {"c", true,
         [](RunConfig& c, const std::string& v) { return parse_double_list(v, c.c); },
         [](const RunConfig& c) { return format_double_list(c.c); },
         "Julia constant, 8 reals: real s,x,y,z then dual s,x,y,z"},
        {"slice", true,
         [](RunConfig& c, const std::string& v) -> SetError {
             const std::vector<std::string> parts = split_commas(v);
             if (parts.size() != 6) {
                 return "expected 5 numbers and a map name, got " + std::to_string(parts.size()) +
                        " values";
             }
             std::array<double, 5> constants{};
             for (size_t i = 0; i < 5; ++i) {
                 if (SetError err = parse_double_value(parts[i], constants[i])) {
                     return err;
                 }
             }
             if (!known_slice_map(parts[5])) {
                 return "unknown slice map '" + parts[5] +
                        "' (expected real-sxy, real-xyz, dual-sxy or dual-xyz)";
             }
             c.slice_constants = constants;
             c.slice_map = parts[5];
             return std::nullopt;
         },
         [](const RunConfig& c) { return format_double_list(c.slice_constants) + "," + c.slice_map; },
         "slice: 5 fixed component values plus the slot-map name"},
        {"iterations", true,
         [](RunConfig& c, const std::string& v) { return parse_int_value(v, c.iterations); },
         [](const RunConfig& c) { return std::to_string(c.iterations); },
         "maximum escape-time iterations (default 10)"},
        {"escape-radius", true,
         [](RunConfig& c, const std::string& v) { return parse_double_value(v, c.escape_radius); },
         [](const RunConfig& c) { return format_double(c.escape_radius); },
         "orbit bail-out magnitude (default 4)"},
        {"squaring-mode", true,
         [](RunConfig& c, const std::string& v) -> SetError {
             if (v != "paper" && v != "clifford") {
                 return "expected paper or clifford, got '" + v + "'";
             }
             c.squaring_mode = v;
             return std::nullopt;
         },
         [](const RunConfig& c) { return c.squaring_mode; },
         "dual-quaternion squaring rule: paper | clifford"},
        {"de", true,
         [](RunConfig& c, const std::string& v) -> SetError {
             if (v != "hart" && v != "alpha") {
                 return "expected hart or alpha, got '" + v + "'";
             }
             c.de_variant = v;
             return std::nullopt;
         },
         [](const RunConfig& c) { return c.de_variant; },
         "distance estimator: hart (log form) | alpha (ratio form)"},
        {"alpha", true,
         [](RunConfig& c, const std::string& v) { return parse_double_value(v, c.alpha); },
         [](const RunConfig& c) { return format_double(c.alpha); },
         "ratio-form scale, in (0, 0.1]"},
        {"width", true,
         [](RunConfig& c, const std::string& v) { return parse_int_value(v, c.width); },
         [](const RunConfig& c) { return std::to_string(c.width); },
         "image width in pixels (default 512)"},
        {"height", true,
         [](RunConfig& c, const std::string& v) { return parse_int_value(v, c.height); },
         [](const RunConfig& c) { return std::to_string(c.height); },
         "image height in pixels (default 512)"},
        {"camera-pos", true,
         [](RunConfig& c, const std::string& v) { return parse_double_list(v, c.camera_pos); },
         [](const RunConfig& c) { return format_double_list(c.camera_pos); },
         "camera position, 3 reals"},
        {"look-at", true,
         [](RunConfig& c, const std::string& v) { return parse_double_list(v, c.look_at); },
         [](const RunConfig& c) { return format_double_list(c.look_at); },
         "camera target, 3 reals"},
        {"up", true,
         [](RunConfig& c, const std::string& v) { return parse_double_list(v, c.up); },
         [](const RunConfig& c) { return format_double_list(c.up); },
         "camera up hint, 3 reals"},
        {"fov", true,
         [](RunConfig& c, const std::string& v) { return parse_double_value(v, c.fov); },
         [](const RunConfig& c) { return format_double(c.fov); },
         "vertical field of view in degrees"},
        {"epsilon", true,
         [](RunConfig& c, const std::string& v) { return parse_double_value(v, c.epsilon); },
         [](const RunConfig& c) { return format_double(c.epsilon); },
         "hit threshold for the march (default 1e-4)"},
        {"max-steps", true,
         [](RunConfig& c, const std::string& v) { return parse_int_value(v, c.max_steps); },
         [](const RunConfig& c) { return std::to_string(c.max_steps); },
         "march step budget per ray (default 256)"},
        {"bounding-radius", true,
         [](RunConfig& c, const std::string& v) { return parse_double_value(v, c.bounding_radius); },
         [](const RunConfig& c) { return format_double(c.bounding_radius); },
         "radius of the culling sphere (default 3)"},
        {"max-ray-distance", true,
         [](RunConfig& c, const std::string& v) { return parse_double_value(v, c.max_ray_distance); },
         [](const RunConfig& c) { return format_double(c.max_ray_distance); },
         "march give-up distance (default 100)"},
        {"no-bounding-sphere", false,
         [](RunConfig& c, const std::string& v) { return parse_bool_value(v, c.no_bounding_sphere); },
         [](const RunConfig& c) { return std::string(c.no_bounding_sphere ? "true" : "false"); },
         "march without the culling sphere"},
        {"ka", true,
         [](RunConfig& c, const std::string& v) { return parse_double_value(v, c.ka); },
         [](const RunConfig& c) { return format_double(c.ka); },
         "ambient coefficient in [0,1]"},
        {"kd", true,
         [](RunConfig& c, const std::string& v) { return parse_double_value(v, c.kd); },
         [](const RunConfig& c) { return format_double(c.kd); },
         "diffuse coefficient in [0,1]"},
        {"ks", true,
         [](RunConfig& c, const std::string& v) { return parse_double_value(v, c.ks); },
         [](const RunConfig& c) { return format_double(c.ks); },
         "specular coefficient in [0,1]"},
        {"specular-exp", true,
         [](RunConfig& c, const std::string& v) { return parse_double_value(v, c.specular_exp); },
         [](const RunConfig& c) { return format_double(c.specular_exp); },
         "specular exponent >= 1"},
        {"ia", true,
         [](RunConfig& c, const std::string& v) { return parse_double_value(v, c.ia); },
         [](const RunConfig& c) { return format_double(c.ia); },
         "ambient light intensity >= 0"},
        {"id", true,
         [](RunConfig& c, const std::string& v) { return parse_double_value(v, c.id); },
         [](const RunConfig& c) { return format_double(c.id); },
         "diffuse light intensity >= 0"},
        {"is", true,
         [](RunConfig& c, const std::string& v) { return parse_double_value(v, c.is); },
         [](const RunConfig& c) { return format_double(c.is); },
         "specular light intensity >= 0"},
        {"light-dir", true,
         [](RunConfig& c, const std::string& v) { return parse_double_list(v, c.light_dir); },
         [](const RunConfig& c) { return format_double_list(c.light_dir); },
         "direction toward the light, 3 reals (normalized internally)"},
        {"color", true,
         [](RunConfig& c, const std::string& v) { return parse_double_list(v, c.color); },
         [](const RunConfig& c) { return format_double_list(c.color); },
         "material base color, 3 reals in [0,1]"},
        {"background", true,
         [](RunConfig& c, const std::string& v) { return parse_double_list(v, c.background); },
         [](const RunConfig& c) { return format_double_list(c.background); },
         "background color, 3 reals in [0,1]"},
        {"no-gamma", false,
         [](RunConfig& c, const std::string& v) { return parse_bool_value(v, c.no_gamma); },
         [](const RunConfig& c) { return std::string(c.no_gamma ? "true" : "false"); },
         "write linear values instead of gamma 2.2"},
        {"resolution", true,
         [](RunConfig& c, const std::string& v) { return parse_int_value(v, c.resolution); },
         [](const RunConfig& c) { return std::to_string(c.resolution); },
         "voxel cells per axis (default 50)"},
        {"bounds", true,
         [](RunConfig& c, const std::string& v) { return parse_double_value(v, c.bounds); },
         [](const RunConfig& c) { return format_double(c.bounds); },
         "voxel grid half extent (default 1.5)"},
        {"seed", true,
         [](RunConfig& c, const std::string& v) { return parse_u64_value(v, c.seed); },
         [](const RunConfig& c) { return std::to_string(c.seed); },
         "sweep RNG seed (64-bit unsigned)"},
        {"count", true,
         [](RunConfig& c, const std::string& v) { return parse_int_value(v, c.count); },
         [](const RunConfig& c) { return std::to_string(c.count); },
         "number of sweep renders (default 6)"},
        {"workers", true,
         [](RunConfig& c, const std::string& v) { return parse_int_value(v, c.workers); },
         [](const RunConfig& c) { return std::to_string(c.workers); },
         "worker threads (default: DQJULIA_WORKERS or hardware)"},
        {"output", true,
         [](RunConfig& c, const std::string& v) -> SetError {
             c.output = v;
             return std::nullopt;
         },
         [](const RunConfig& c) { return c.output; },
         "output file (render/voxel) or directory (sweep)"},
        {"dump-config", false,
         [](RunConfig& c, const std::string& v) { return parse_bool_value(v, c.dump_config); },
         [](const RunConfig& c) { return std::string(c.dump_config ? "true" : "false"); },
         "print the resolved configuration and exit", false},
    };
    return table;
}

const FlagSpec* find_flag(const std::string& name) {
    for (const FlagSpec& spec : flag_table()) {
        if (name == spec.name) {
            return &spec;
        }
    }
    return nullptr;
}

std::string trim(const std::string& text) {
    size_t begin = 0;
    size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
        --end;
    }
    return text.substr(begin, end - begin);
}

SetError apply_config_document(RunConfig& config, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        return "cannot open config file '" + path + "'";
    }
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') {
            continue;
        }
        const size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            return path + ":" + std::to_string(line_number) + ": expected 'key = value'";
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        const FlagSpec* spec = find_flag(key);
        if (!spec) {
            return path + ":" + std::to_string(line_number) + ": unknown key '" + key + "'";
        }
        if (SetError err = spec->set(config, value)) {
            return path + ":" + std::to_string(line_number) + ": " + key + ": " + *err;
        }
    }
    return std::nullopt;
}

SetError resolve_workers(RunConfig& config) {
    if (config.workers != 0) {
        return std::nullopt;
    }
    if (const char* env = std::getenv("DQJULIA_WORKERS")) {
        int value = 0;
        if (SetError err = parse_int_value(env, value)) {
            return "DQJULIA_WORKERS: " + *err;
        }
        config.workers = value;
        return std::nullopt;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    config.workers = hw > 0 ? static_cast<int>(hw) : 1;
    return std::nullopt;
}

void resolve_output(RunConfig& config) {
    if (!config.output.empty()) {
        return;
    }
    switch (config.mode) {
    case RunMode::Render: config.output = "render.ppm"; break;
    case RunMode::Voxel: config.output = "voxel.obj"; break;
    case RunMode::Sweep: config.output = "sweep"; break;
    }
}

SetError validate(const RunConfig& c) {
    if (c.iterations < 1) {
        return "iterations: must be >= 1";
    }
    if (!(c.escape_radius > 1.0)) {
        return "escape-radius: must be > 1";
    }
    if (c.de_variant == "alpha" && !(c.alpha > 0.0 && c.alpha <= 0.1)) {
        return "alpha: must be in (0, 0.1]";
    }
    if (c.width < 1) {
        return "width: must be >= 1";
    }
    if (c.height < 1) {
        return "height: must be >= 1";
    }
    if (!(c.fov > 0.0 && c.fov < 180.0)) {
        return "fov: must be in (0, 180)";
    }
    if (!(c.epsilon > 0.0)) {
        return "epsilon: must be > 0";
    }
    if (c.max_steps < 1) {
        return "max-steps: must be >= 1";
    }
    if (!(c.bounding_radius > 0.0)) {
        return "bounding-radius: must be > 0";
    }
    if (!(c.epsilon < c.bounding_radius)) {
        return "epsilon: must be smaller than bounding-radius";
    }
    if (!(c.max_ray_distance > 0.0)) {
        return "max-ray-distance: must be > 0";
    }
    for (const auto& [value, name] :
         {std::pair{c.ka, "ka"}, std::pair{c.kd, "kd"}, std::pair{c.ks, "ks"}}) {
        if (!(value >= 0.0 && value <= 1.0)) {
            return std::string(name) + ": must be in [0, 1]";
        }
    }
    if (!(c.specular_exp >= 1.0)) {
        return "specular-exp: must be >= 1";
    }
    for (const auto& [value, name] :
         {std::pair{c.ia, "ia"}, std::pair{c.id, "id"}, std::pair{c.is, "is"}}) {
        if (!(value >= 0.0)) {
            return std::string(name) + ": must be >= 0";
        }
    }
    for (int i = 0; i < 3; ++i) {
        if (!(c.color[i] >= 0.0 && c.color[i] <= 1.0)) {
            return "color: components must be in [0, 1]";
        }
        if (!(c.background[i] >= 0.0 && c.background[i] <= 1.0)) {
            return "background: components must be in [0, 1]";
        }
    }
    if (c.light_dir[0] == 0.0 && c.light_dir[1] == 0.0 && c.light_dir[2] == 0.0) {
        return "light-dir: must be non-zero";
    }
    if (c.camera_pos == c.look_at) {
        return "camera-pos: must differ from look-at";
    }
    {
        const Vec3 view{c.look_at[0] - c.camera_pos[0], c.look_at[1] - c.camera_pos[1],
                        c.look_at[2] - c.camera_pos[2]};
        const Vec3 up{c.up[0], c.up[1], c.up[2]};
        const Vec3 crossed = cross(view, up);
        if (dot(up, up) == 0.0 || dot(crossed, crossed) == 0.0) {
            return "up: must be non-zero and not parallel to the view direction";
        }
    }
    if (c.resolution < 1) {
        return "resolution: must be >= 1";
    }
    if (!(c.bounds > 0.0)) {
        return "bounds: must be > 0";
    }
    if (c.mode == RunMode::Sweep && c.count < 1) {
        return "count: must be >= 1 in sweep mode";
    }
    if (c.workers < 1) {
        return "workers: must be >= 1";
    }
    if (c.output.empty()) {
        return "output: must be non-empty";
    }
    return std::nullopt;
}

} // namespace

ParseOutcome parse_command_line(const std::vector<std::string>& args) {
    ParseOutcome outcome;
    RunConfig& config = outcome.config;

    struct Pending {
        const FlagSpec* spec;
        std::string value;
    };
    std::vector<Pending> pending;
    std::string config_path;

    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg == "--help" || arg == "-h") {
            outcome.kind = ParseOutcome::Kind::Help;
            outcome.message = usage_text();
            return outcome;
        }
        if (arg.rfind("--", 0) != 0 || arg.size() <= 2) {
            outcome.kind = ParseOutcome::Kind::Error;
            outcome.message = "unexpected argument '" + arg + "'";
            return outcome;
        }

        std::string name = arg.substr(2);
        std::string value;
        bool inline_value = false;
        if (const size_t eq = name.find('='); eq != std::string::npos) {
            value = name.substr(eq + 1);
            name = name.substr(0, eq);
            inline_value = true;
        }

        if (name == "config") {
            if (!inline_value) {
                if (i + 1 >= args.size()) {
                    outcome.kind = ParseOutcome::Kind::Error;
                    outcome.message = "--config: missing value";
                    return outcome;
                }
                value = args[++i];
            }
            config_path = value;
            continue;
        }

        const FlagSpec* spec = find_flag(name);
        if (!spec) {
            outcome.kind = ParseOutcome::Kind::Error;
            outcome.message = "unknown flag '--" + name + "'";
            return outcome;
        }
        if (spec->takes_value && !inline_value) {
            if (i + 1 >= args.size()) {
                outcome.kind = ParseOutcome::Kind::Error;
                outcome.message = "--" + name + ": missing value";
                return outcome;
            }
            value = args[++i];
        }
        if (!spec->takes_value && !inline_value) {
            value = "true";
        }
        pending.push_back({spec, value});
    }

    // precedence: defaults, env worker count, config document, flags
    if (SetError err = resolve_workers(config)) {
        outcome.kind = ParseOutcome::Kind::Error;
        outcome.message = *err;
        return outcome;
    }
    if (!config_path.empty()) {
        if (SetError err = apply_config_document(config, config_path)) {
            outcome.kind = ParseOutcome::Kind::Error;
            outcome.message = *err;
            return outcome;
        }
    }
    for (const Pending& p : pending) {
        if (SetError err = p.spec->set(config, p.value)) {
            outcome.kind = ParseOutcome::Kind::Error;
            outcome.message = "--" + std::string(p.spec->name) + ": " + *err;
            return outcome;
        }
    }

    resolve_output(config);
    if (SetError err = validate(config)) {
        outcome.kind = ParseOutcome::Kind::Error;
        outcome.message = *err;
        return outcome;
    }
    return outcome;
}

std::string dump_config_document(const RunConfig& config) {
    std::string out;
    for (const FlagSpec& spec : flag_table()) {
        if (!spec.in_document) {
            continue;
        }
        out += spec.name;
        out += " = ";
        out += spec.get(config);
        out += '\n';
    }
    return out;
}

std::string usage_text() {
    std::ostringstream out;
    out << "usage: dqjulia [--config FILE] [--flag value ...]\n\n"
        << "Renders 3D slices of dual-quaternion Julia sets by distance-estimated\n"
        << "ray marching, extracts voxel occupancy meshes, and sweeps random\n"
        << "constants. Flags override --config values, which override defaults.\n\n"
        << "flags:\n";
    for (const FlagSpec& spec : flag_table()) {
        out << "  --" << spec.name << (spec.takes_value ? " VALUE" : "") << "\n        " << spec.help
            << "\n";
    }
    out << "  --config FILE\n        read 'key = value' lines before applying flags\n"
        << "  --help\n        print this text\n";
    return out.str();
}

SliceConfig make_slice(const std::string& map_name, const std::array<double, 5>& constants) {
    SliceConfig slice;
    if (map_name == "real-sxy") {
        slice.point_slots = {0, 1, 2};
    } else if (map_name == "real-xyz") {
        slice.point_slots = {1, 2, 3};
    } else if (map_name == "dual-sxy") {
        slice.point_slots = {4, 5, 6};
    } else {  // dual-xyz
        slice.point_slots = {5, 6, 7};
    }

    size_t next_constant = 0;
    for (int slot = 0; slot < kDualQuaternionComponents; ++slot) {
        const bool is_point = slot == slice.point_slots[0] || slot == slice.point_slots[1] ||
                              slot == slice.point_slots[2];
        if (!is_point) {
            slice.constants[static_cast<size_t>(slot)] = constants[next_constant++];
        }
    }
    return slice;
}

} // namespace dqjulia::cli
