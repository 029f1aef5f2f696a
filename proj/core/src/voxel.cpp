#include "dqjulia/voxel.hpp"

#include <algorithm>
#include <cstdio>
#include <thread>

namespace dqjulia {

namespace {

void voxelize_slab(int z_begin, int z_end, const SceneParams& scene, VoxelGrid& grid) {
    const int res = grid.resolution;
    for (int z = z_begin; z < z_end; ++z) {
        for (int y = 0; y < res; ++y) {
            for (int x = 0; x < res; ++x) {
                grid.occupancy[grid.index(x, y, z)] =
                    membership(grid.cell_center(x, y, z), scene) ? 1 : 0;
            }
        }
    }
}

} // namespace

VoxelGrid voxelize(const SceneParams& scene, const VoxelGridConfig& config) {
    VoxelGrid grid;
    grid.resolution = config.resolution;
    grid.bounds_min = config.bounds_min;
    grid.bounds_max = config.bounds_max;
    const size_t res = static_cast<size_t>(config.resolution);
    grid.occupancy.assign(res * res * res, 0);

    const int workers = std::clamp(config.workers, 1, config.resolution);
    if (workers == 1) {
        voxelize_slab(0, config.resolution, scene, grid);
        return grid;
    }

    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    const int slab = (config.resolution + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int z_begin = w * slab;
        const int z_end = std::min(config.resolution, z_begin + slab);
        if (z_begin >= z_end) {
            break;
        }
        pool.emplace_back([=, &scene, &grid] { voxelize_slab(z_begin, z_end, scene, grid); });
    }
    for (auto& t : pool) {
        t.join();
    }
    return grid;
}

std::string export_mesh(const VoxelGrid& grid) {
    // Corner k of a cell offsets the cell origin by bit pattern
    // (k&1, k>>1&1, k>>2&1); triangles below wind outward.
    static constexpr int kFaces[12][3] = {
        {0, 2, 3}, {0, 3, 1},  // -z
        {4, 5, 7}, {4, 7, 6},  // +z
        {0, 1, 5}, {0, 5, 4},  // -y
        {2, 6, 7}, {2, 7, 3},  // +y
        {0, 4, 6}, {0, 6, 2},  // -x
        {1, 3, 7}, {1, 7, 5},  // +x
    };

    const Vec3 cell = grid.cell_size();
    const int res = grid.resolution;

    std::string vertices;
    std::string faces;
    char line[128];

    size_t cube = 0;
    for (int z = 0; z < res; ++z) {
        for (int y = 0; y < res; ++y) {
            for (int x = 0; x < res; ++x) {
                if (!grid.occupied(x, y, z)) {
                    continue;
                }
                const Vec3 origin{grid.bounds_min.x + x * cell.x, grid.bounds_min.y + y * cell.y,
                                  grid.bounds_min.z + z * cell.z};
                for (int corner = 0; corner < 8; ++corner) {
                    const double vx = origin.x + ((corner >> 0) & 1) * cell.x;
                    const double vy = origin.y + ((corner >> 1) & 1) * cell.y;
                    const double vz = origin.z + ((corner >> 2) & 1) * cell.z;
                    std::snprintf(line, sizeof(line), "v %.9g %.9g %.9g\n", vx, vy, vz);
                    vertices += line;
                }
                const size_t base = cube * 8 + 1;  // 1-based indices
                for (const auto& f : kFaces) {
                    std::snprintf(line, sizeof(line), "f %zu %zu %zu\n", base + f[0], base + f[1],
                                  base + f[2]);
                    faces += line;
                }
                ++cube;
            }
        }
    }
    return vertices + faces;
}

size_t inside_count(const VoxelGrid& grid) {
    size_t count = 0;
    for (const auto cell : grid.occupancy) {
        count += cell != 0 ? 1u : 0u;
    }
    return count;
}

} // namespace dqjulia
