#pragma once

#include <cstdint>
#include <vector>

#include "cubpart/core.hpp"

namespace cubpart {

/// Four-cluster synthetic family: 8*scale elements in ground-truth blocks
/// of sizes scale, 2*scale, 2*scale, 3*scale.  alpha drives both the cost
/// means (-1+alpha within, 1-alpha across) and the noise level; beta
/// shifts weight from pair costs (scaled by 1-beta) to triple costs
/// (scaled by beta).
struct PartitionDatasetParams
{
    int scale = 1;
    double alpha = 0.0;
    double beta = 0.5;
    std::uint64_t seed = 0;
};

/// Ground-truth block id per element for the given scale.
std::vector<int> partition_ground_truth(int scale);

CostFunction generate_partition_instance(const PartitionDatasetParams& params);

struct Point
{
    double x = 0.0;
    double y = 0.0;
};

/// Three unit-side equilateral triangles in the plane (9 vertices,
/// triangle by triangle).
std::vector<Point> default_triangle_layout();

/// Equilateral-triangle fitting family: points_per_vertex samples around
/// each of the 9 layout vertices with isotropic Gaussian noise sigma.
/// Pair costs are zero; triple costs reward near-equilateral triples.
struct GeometricDatasetParams
{
    double sigma = 0.05;
    int points_per_vertex = 5;
    std::uint64_t seed = 0;
    std::vector<Point> layout = default_triangle_layout();
};

struct GeometricInstance
{
    CostFunction costs;
    std::vector<Point> points;
    std::vector<int> vertex_of; // layout vertex each point was drawn from
};

GeometricInstance generate_geometric_instance(const GeometricDatasetParams& params);

/// Cost of one point triple: distance-based when points are close
/// relative to 4*sigma, otherwise driven by how far the interior angles
/// deviate from 60 degrees.  Continuous across both branch thresholds.
double equilateral_triple_cost(const Point& a, const Point& b, const Point& c, double sigma);

} // namespace cubpart
