#include "cubpart/maps.hpp"

#include <stdexcept>

namespace cubpart {

void validate_subset(int n, const std::vector<int>& r)
{
    int prev = -1;
    for (int v : r) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("subset element out of range");
        if (v <= prev)
            throw std::invalid_argument("subset must be strictly increasing");
        prev = v;
    }
}

Labeling apply_cut_map(const Labeling& x, const std::vector<int>& r)
{
    validate_subset(x.n, r);
    std::vector<char> in_r(x.n, 0);
    for (int v : r)
        in_r[v] = 1;

    Labeling out = x;
    for (int q = 1; q < x.n; ++q)
        for (int p = 0; p < q; ++p)
            if (in_r[p] != in_r[q])
                out.pair(p, q) = 0;
    return out;
}

Labeling apply_join_map(const Labeling& x, const std::vector<int>& r)
{
    validate_subset(x.n, r);
    if (r.empty())
        return x;

    // Work in partition space: merge every block that intersects r.
    Partition parts = partition_from_labeling(x);
    std::vector<char> in_r(x.n, 0);
    for (int v : r)
        in_r[v] = 1;

    Partition merged;
    merged.n = x.n;
    std::vector<int> joint;
    for (const auto& block : parts.blocks) {
        bool touches = false;
        for (int v : block)
            if (in_r[v]) {
                touches = true;
                break;
            }
        if (touches)
            joint.insert(joint.end(), block.begin(), block.end());
        else
            merged.blocks.push_back(block);
    }
    merged.blocks.push_back(std::move(joint));
    return labeling_from_partition(merged);
}

bool is_improving(const CostFunction& c,
                  const std::function<Labeling(const Labeling&)>& map,
                  int oracle_bound)
{
    bool improving = true;
    enumerate_partitions(
        c.n,
        [&](const Partition& p) {
            if (!improving)
                return;
            Labeling x = labeling_from_partition(p);
            Labeling y = map(x);
            if (evaluate_objective(c, y) > evaluate_objective(c, x))
                improving = false;
        },
        oracle_bound);
    return improving;
}

} // namespace cubpart
