#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dqjulia/julia.hpp"
#include "dqjulia/vec3.hpp"

namespace dqjulia {

struct VoxelGridConfig {
    int resolution = 50;              // cells per axis
    Vec3 bounds_min{-1.5, -1.5, -1.5};
    Vec3 bounds_max{1.5, 1.5, 1.5};
    int workers = 1;
};

// Dense boolean occupancy over an axis-aligned box, x-fastest ordering:
// index = x + resolution * (y + resolution * z).
struct VoxelGrid {
    int resolution = 0;
    Vec3 bounds_min;
    Vec3 bounds_max;
    std::vector<std::uint8_t> occupancy;

    size_t index(int x, int y, int z) const {
        return static_cast<size_t>(x) +
               static_cast<size_t>(resolution) * (static_cast<size_t>(y) + static_cast<size_t>(resolution) * static_cast<size_t>(z));
    }
    bool occupied(int x, int y, int z) const { return occupancy[index(x, y, z)] != 0; }
    Vec3 cell_size() const {
        const double inv = 1.0 / resolution;
        return {(bounds_max.x - bounds_min.x) * inv, (bounds_max.y - bounds_min.y) * inv,
                (bounds_max.z - bounds_min.z) * inv};
    }
    Vec3 cell_center(int x, int y, int z) const {
        const Vec3 s = cell_size();
        return {bounds_min.x + (x + 0.5) * s.x, bounds_min.y + (y + 0.5) * s.y,
                bounds_min.z + (z + 0.5) * s.z};
    }
};

// Mark each cell occupied iff its center is a member of the set.
// Parallelizes over z-slabs writing disjoint ranges; output is independent
// of the worker count.
VoxelGrid voxelize(const SceneParams& scene, const VoxelGridConfig& config);

// One axis-aligned cube (8 vertices, 12 triangles) per occupied cell, in
// cell-index order. Plain text: all "v x y z" lines first, then all
// "f i j k" lines with 1-based global indices.
std::string export_mesh(const VoxelGrid& grid);

size_t inside_count(const VoxelGrid& grid);

} // namespace dqjulia
