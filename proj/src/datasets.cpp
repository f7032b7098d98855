#include "cubpart/datasets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cubpart/rng.hpp"

namespace cubpart {

namespace rng {

std::pair<double, double> Substream::normal_pair()
{
    double u1 = uniform01();
    double u2 = uniform01();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

} // namespace rng

std::vector<int> partition_ground_truth(int scale)
{
    if (scale < 1)
        throw std::invalid_argument("scale must be at least 1");
    std::vector<int> block_of;
    block_of.reserve(8 * scale);
    const int sizes[4] = {scale, 2 * scale, 2 * scale, 3 * scale};
    for (int b = 0; b < 4; ++b)
        for (int k = 0; k < sizes[b]; ++k)
            block_of.push_back(b);
    return block_of;
}

CostFunction generate_partition_instance(const PartitionDatasetParams& params)
{
    if (params.scale < 1)
        throw std::invalid_argument("scale must be at least 1");
    if (params.alpha < 0.0 || params.alpha > 1.0)
        throw std::invalid_argument("alpha must lie in [0, 1]");
    if (params.beta < 0.0 || params.beta > 1.0)
        throw std::invalid_argument("beta must lie in [0, 1]");

    const std::vector<int> truth = partition_ground_truth(params.scale);
    const int n = static_cast<int>(truth.size());
    const double sigma = 0.1 + params.alpha * (0.4 - 0.1);
    const double within_mean = -1.0 + params.alpha;
    const double across_mean = 1.0 - params.alpha;

    CostFunction c(n);
    for (int q = 1; q < n; ++q)
        for (int p = 0; p < q; ++p) {
            int idx = pair_rank(p, q);
            double mean = truth[p] == truth[q] ? within_mean : across_mean;
            double z = rng::Substream(params.seed, rng::kTagPairCost, idx).normal();
            c.pair_costs[idx] = (mean + sigma * z) * (1.0 - params.beta);
        }
    for (int r = 2; r < n; ++r)
        for (int q = 1; q < r; ++q)
            for (int p = 0; p < q; ++p) {
                int idx = triple_rank(p, q, r);
                bool within = truth[p] == truth[q] && truth[p] == truth[r];
                double mean = within ? within_mean : across_mean;
                double z = rng::Substream(params.seed, rng::kTagTripleCost, idx).normal();
                c.triple_costs[idx] = (mean + sigma * z) * params.beta;
            }
    return c;
}

std::vector<Point> default_triangle_layout()
{
    // three unit-side equilateral triangles with distinct centers and
    // orientations; circumradius of a unit triangle is 1/sqrt(3)
    struct Placement
    {
        Point center;
        double base_angle_deg;
    };
    const Placement placements[3] = {
        {{0.0, 1.0}, 80.0},
        {{0.5, 0.55}, 10.0},
        {{1.5, -0.7}, 60.0},
    };
    const double radius = 1.0 / std::sqrt(3.0);
    std::vector<Point> layout;
    for (const auto& pl : placements)
        for (int corner = 0; corner < 3; ++corner) {
            double angle = (pl.base_angle_deg + 120.0 * corner) * std::numbers::pi / 180.0;
            layout.push_back({pl.center.x + radius * std::cos(angle),
                              pl.center.y + radius * std::sin(angle)});
        }
    return layout;
}

namespace {

double distance(const Point& a, const Point& b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

double interior_angle(const Point& at, const Point& u, const Point& v)
{
    double ux = u.x - at.x, uy = u.y - at.y;
    double vx = v.x - at.x, vy = v.y - at.y;
    double lu = std::hypot(ux, uy);
    double lv = std::hypot(vx, vy);
    double cosine = (ux * vx + uy * vy) / (lu * lv);
    cosine = std::min(1.0, std::max(-1.0, cosine));
    return std::acos(cosine);
}

} // namespace

double equilateral_triple_cost(const Point& a, const Point& b, const Point& c, double sigma)
{
    if (!(sigma > 0.0))
        throw std::invalid_argument("sigma must be positive");
    const double dab = distance(a, b);
    const double dac = distance(a, c);
    const double dbc = distance(b, c);
    const double dmax = std::max({dab, dac, dbc});
    const double dmin = std::min({dab, dac, dbc});
    const double close = 4.0 * sigma;

    if (dmax <= close)
        return -1.0 + dmax / close;
    if (dmin <= close)
        return 0.0;

    // all pairwise distances positive here, so the angles are defined
    const double third = std::numbers::pi / 3.0;
    double deviation = std::fabs(interior_angle(a, b, c) - third)
                       + std::fabs(interior_angle(b, a, c) - third)
                       + std::fabs(interior_angle(c, a, b) - third);
    if (deviation < std::numbers::pi / 6.0)
        return -1.0 + 6.0 * deviation / std::numbers::pi;
    return (6.0 / 7.0) * (deviation - std::numbers::pi / 6.0) / std::numbers::pi;
}

GeometricInstance generate_geometric_instance(const GeometricDatasetParams& params)
{
    if (!(params.sigma > 0.0))
        throw std::invalid_argument("sigma must be positive");
    if (params.points_per_vertex < 1)
        throw std::invalid_argument("points_per_vertex must be at least 1");
    if (params.layout.size() != 9)
        throw std::invalid_argument("layout must have 9 triangle vertices");

    GeometricInstance out;
    const int n = 9 * params.points_per_vertex;
    for (int vertex = 0; vertex < 9; ++vertex)
        for (int k = 0; k < params.points_per_vertex; ++k) {
            int idx = vertex * params.points_per_vertex + k;
            auto [zx, zy] = rng::Substream(params.seed, rng::kTagPoint, idx).normal_pair();
            out.points.push_back({params.layout[vertex].x + params.sigma * zx,
                                  params.layout[vertex].y + params.sigma * zy});
            out.vertex_of.push_back(vertex);
        }

    out.costs = CostFunction(n);
    for (int r = 2; r < n; ++r)
        for (int q = 1; q < r; ++q)
            for (int p = 0; p < q; ++p)
                out.costs.triple_costs[triple_rank(p, q, r)] = equilateral_triple_cost(
                    out.points[p], out.points[q], out.points[r], params.sigma);
    return out;
}

} // namespace cubpart
