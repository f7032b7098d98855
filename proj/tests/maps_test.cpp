#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cubpart/maps.hpp"
#include "oracles.hpp"

using namespace cubpart;

namespace {

Labeling random_feasible(oracles::TestRng& rng, int n)
{
    // random block assignment, then the induced labeling
    std::vector<int> block_of(n);
    for (int v = 0; v < n; ++v)
        block_of[v] = rng.below(n);
    Labeling x(n);
    for (int q = 1; q < n; ++q)
        for (int p = 0; p < q; ++p)
            x.pair(p, q) = block_of[p] == block_of[q] ? 1 : 0;
    return x;
}

std::vector<int> random_subset(oracles::TestRng& rng, int n)
{
    std::vector<int> r;
    for (int v = 0; v < n; ++v)
        if (rng.below(2))
            r.push_back(v);
    return r;
}

// independent route for the join map: merge block ids directly
Labeling join_by_blocks(const Labeling& x, const std::vector<int>& r)
{
    std::vector<int> block_of(x.n);
    Partition parts = partition_from_labeling(x);
    for (int b = 0; b < static_cast<int>(parts.blocks.size()); ++b)
        for (int v : parts.blocks[b])
            block_of[v] = b;
    std::vector<char> touched(parts.blocks.size(), 0);
    for (int v : r)
        touched[block_of[v]] = 1;
    int joint = static_cast<int>(parts.blocks.size());
    for (int v = 0; v < x.n; ++v)
        if (touched[block_of[v]])
            block_of[v] = joint;
    Labeling out(x.n);
    for (int q = 1; q < x.n; ++q)
        for (int p = 0; p < q; ++p)
            out.pair(p, q) = block_of[p] == block_of[q] ? 1 : 0;
    return out;
}

} // namespace

TEST_CASE("cut map with empty or full subset is the identity")
{
    oracles::TestRng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Labeling x = random_feasible(rng, 5);
        CHECK(apply_cut_map(x, {}).x == x.x);
        CHECK(apply_cut_map(x, {0, 1, 2, 3, 4}).x == x.x);
    }
}

TEST_CASE("cut map on the all-joined labeling")
{
    Labeling x(3);
    for (auto& v : x.x)
        v = 1;
    Labeling cut = apply_cut_map(x, {0});
    CHECK(cut.pair(0, 1) == 0);
    CHECK(cut.pair(0, 2) == 0);
    CHECK(cut.pair(1, 2) == 1);
}

TEST_CASE("cut map output is feasible and idempotent")
{
    oracles::TestRng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + rng.below(5);
        Labeling x = random_feasible(rng, n);
        std::vector<int> r = random_subset(rng, n);
        Labeling cut = apply_cut_map(x, r);
        CHECK(cut.is_feasible());
        CHECK(apply_cut_map(cut, r).x == cut.x);
    }
}

TEST_CASE("join map documented cases")
{
    Labeling x(4);
    CHECK(apply_join_map(x, {}).x == x.x);

    Labeling joined = apply_join_map(x, {0, 1});
    CHECK(joined.pair(0, 1) == 1);
    CHECK(joined.pair(0, 2) == 0);
    CHECK(joined.pair(0, 3) == 0);
    CHECK(joined.pair(2, 3) == 0);

    Labeling with_block(4);
    with_block.pair(2, 3) = 1;
    Labeling merged = apply_join_map(with_block, {0, 2});
    CHECK(merged.pair(0, 2) == 1);
    CHECK(merged.pair(0, 3) == 1);
    CHECK(merged.pair(2, 3) == 1);
    CHECK(merged.pair(0, 1) == 0);
    CHECK(merged.pair(1, 2) == 0);
    CHECK(merged.pair(1, 3) == 0);
}

TEST_CASE("join map agrees with the block-merge route and stays feasible")
{
    oracles::TestRng rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + rng.below(5);
        Labeling x = random_feasible(rng, n);
        std::vector<int> r = random_subset(rng, n);
        Labeling joined = apply_join_map(x, r);
        CHECK(joined.is_feasible());
        CHECK(joined.x == join_by_blocks(x, r).x);
    }
}

TEST_CASE("both maps exhaustively feasible on small ground sets")
{
    for (int n = 2; n <= 5; ++n) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> r;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v))
                    r.push_back(v);
            enumerate_partitions(n, [&](const Partition& p) {
                Labeling x = labeling_from_partition(p);
                CHECK(apply_join_map(x, r).is_feasible());
                CHECK(apply_cut_map(x, r).is_feasible());
            });
        }
    }
}

TEST_CASE("identity map is improving for any instance")
{
    oracles::TestRng rng(13);
    CostFunction c = oracles::random_instance(rng, 5);
    CHECK(is_improving(c, [](const Labeling& x) { return x; }));
}

TEST_CASE("conditional cut map is improving when the boundary is nonnegative")
{
    oracles::TestRng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + rng.below(4);
        CostFunction c = oracles::random_instance(rng, n);
        std::vector<int> r{0, 1};
        // lift every boundary cost to be nonnegative
        for (int q = 1; q < n; ++q)
            for (int p = 0; p < q; ++p) {
                bool pin = p <= 1, qin = q <= 1;
                if (pin != qin)
                    c.pair(p, q) = std::fabs(c.pair(p, q));
            }
        for (int rr = 2; rr < n; ++rr)
            for (int q = 1; q < rr; ++q)
                for (int p = 0; p < q; ++p) {
                    int inside = (p <= 1) + (q <= 1) + (rr <= 1);
                    if (inside >= 1 && inside <= 2)
                        c.triple(p, q, rr) = std::fabs(c.triple(p, q, rr));
                }

        auto conditional_cut = [&r](const Labeling& x) {
            bool already_cut = true;
            for (int v : r)
                for (int u = 0; u < x.n; ++u)
                    if (u != v && std::find(r.begin(), r.end(), u) == r.end()
                        && x.pair(u, v))
                        already_cut = false;
            return already_cut ? x : apply_cut_map(x, r);
        };
        CHECK(is_improving(c, conditional_cut));
    }
}

TEST_CASE("joining everything is not improving on the counterexample instance")
{
    CostFunction c(3);
    c.triple(0, 1, 2) = 5.0;
    c.pair(0, 1) = c.pair(0, 2) = c.pair(1, 2) = -2.0;
    auto join_all = [](const Labeling& x) { return apply_join_map(x, {0, 1, 2}); };
    CHECK_FALSE(is_improving(c, join_all));
}
