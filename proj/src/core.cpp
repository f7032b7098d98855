#include "cubpart/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cubpart {

namespace {

void require(bool cond, const std::string& what)
{
    if (!cond)
        throw std::invalid_argument(what);
}

} // namespace

CostFunction::CostFunction(int n_elements)
    : n(n_elements)
{
    require(n >= 1, "cost function needs at least one element");
    pair_costs.assign(num_pairs(n), 0.0);
    triple_costs.assign(num_triples(n), 0.0);
}

void CostFunction::validate() const
{
    require(n >= 1, "cost function needs at least one element");
    require(static_cast<int>(pair_costs.size()) == num_pairs(n), "pair cost array has wrong length");
    require(static_cast<int>(triple_costs.size()) == num_triples(n), "triple cost array has wrong length");
    require(std::isfinite(constant), "constant term is not finite");
    for (double v : pair_costs)
        require(std::isfinite(v), "pair cost is not finite");
    for (double v : triple_costs)
        require(std::isfinite(v), "triple cost is not finite");
}

Labeling::Labeling(int n_elements)
    : n(n_elements)
{
    require(n >= 1, "labeling needs at least one element");
    x.assign(num_pairs(n), 0);
}

bool Labeling::is_feasible() const
{
    // A 0/1 pair vector corresponds to a partition iff no triple has
    // exactly two of its three pairs joined.
    for (int r = 2; r < n; ++r)
        for (int q = 1; q < r; ++q)
            for (int p = 0; p < q; ++p)
                if (pair(p, q) + pair(p, r) + pair(q, r) == 2)
                    return false;
    return true;
}

void Partition::validate() const
{
    require(n >= 1, "partition needs at least one element");
    std::vector<char> seen(n, 0);
    for (const auto& block : blocks) {
        require(!block.empty(), "partition block is empty");
        for (int v : block) {
            require(v >= 0 && v < n, "partition element out of range");
            require(!seen[v], "partition blocks overlap");
            seen[v] = 1;
        }
    }
    for (int v = 0; v < n; ++v)
        require(seen[v], "partition does not cover the ground set");
}

double evaluate_objective(const CostFunction& c, const Labeling& x)
{
    if (c.n != x.n)
        throw std::invalid_argument("cost function and labeling have different sizes");
    if (!x.is_feasible())
        throw std::invalid_argument("labeling violates transitivity");

    double value = 0.0;
    for (int r = 2; r < c.n; ++r)
        for (int q = 1; q < r; ++q)
            for (int p = 0; p < q; ++p)
                if (x.pair(p, q) && x.pair(p, r) && x.pair(q, r))
                    value += c.triple_costs[triple_rank(p, q, r)];
    for (int q = 1; q < c.n; ++q)
        for (int p = 0; p < q; ++p)
            if (x.pair(p, q))
                value += c.pair_costs[pair_rank(p, q)];
    value += c.constant;
    return value;
}

double evaluate_objective(const CostFunction& c, const std::vector<int>& block_of)
{
    if (static_cast<int>(block_of.size()) != c.n)
        throw std::invalid_argument("block assignment has wrong length");

    double value = 0.0;
    for (int r = 2; r < c.n; ++r)
        for (int q = 1; q < r; ++q)
            for (int p = 0; p < q; ++p)
                if (block_of[p] == block_of[q] && block_of[p] == block_of[r])
                    value += c.triple_costs[triple_rank(p, q, r)];
    for (int q = 1; q < c.n; ++q)
        for (int p = 0; p < q; ++p)
            if (block_of[p] == block_of[q])
                value += c.pair_costs[pair_rank(p, q)];
    value += c.constant;
    return value;
}

Labeling labeling_from_partition(const Partition& p)
{
    p.validate();
    std::vector<int> block_of(p.n, -1);
    for (int b = 0; b < static_cast<int>(p.blocks.size()); ++b)
        for (int v : p.blocks[b])
            block_of[v] = b;

    Labeling x(p.n);
    for (int q = 1; q < p.n; ++q)
        for (int pp = 0; pp < q; ++pp)
            x.pair(pp, q) = block_of[pp] == block_of[q] ? 1 : 0;
    return x;
}

Partition partition_from_labeling(const Labeling& x)
{
    if (x.n < 1)
        throw std::invalid_argument("labeling needs at least one element");
    if (!x.is_feasible())
        throw std::invalid_argument("labeling violates transitivity");

    Partition out;
    out.n = x.n;
    std::vector<int> block_of(x.n, -1);
    for (int v = 0; v < x.n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (x.pair(u, v)) {
                block_of[v] = block_of[u];
                break;
            }
        }
        if (block_of[v] < 0) {
            block_of[v] = static_cast<int>(out.blocks.size());
            out.blocks.emplace_back();
        }
        out.blocks[block_of[v]].push_back(v);
    }
    return out;
}

std::uint64_t bell_number(int n)
{
    if (n < 0 || n > 25)
        throw std::invalid_argument("bell_number supports 0 <= n <= 25");
    // Bell triangle; row[0] of row k equals Bell(k).
    std::vector<std::uint64_t> row{1};
    for (int k = 1; k <= n; ++k) {
        std::vector<std::uint64_t> next(k + 1);
        next[0] = row.back();
        for (int i = 1; i <= k; ++i)
            next[i] = next[i - 1] + row[i - 1];
        row = std::move(next);
    }
    return row[0];
}

namespace {

template <class Visit>
void walk_assignments(int n, std::vector<int>& block_of, int pos, int num_blocks, Visit&& visit)
{
    if (pos == n) {
        visit(block_of);
        return;
    }
    for (int b = 0; b <= num_blocks; ++b) {
        block_of[pos] = b;
        walk_assignments(n, block_of, pos + 1, b == num_blocks ? num_blocks + 1 : num_blocks,
                         visit);
    }
}

} // namespace

void enumerate_block_assignments(int n,
                                 const std::function<void(const std::vector<int>&)>& visit,
                                 int oracle_bound)
{
    if (n < 1)
        throw std::invalid_argument("enumeration needs at least one element");
    if (n > oracle_bound)
        throw std::invalid_argument("ground set exceeds the oracle bound of "
                                    + std::to_string(oracle_bound));
    std::vector<int> block_of(n, 0);
    walk_assignments(n, block_of, 1, 1, visit);
}

void enumerate_partitions(int n,
                          const std::function<void(const Partition&)>& visit,
                          int oracle_bound)
{
    enumerate_block_assignments(
        n,
        [&](const std::vector<int>& block_of) {
            Partition p;
            p.n = n;
            int num_blocks = 0;
            for (int v = 0; v < n; ++v)
                num_blocks = std::max(num_blocks, block_of[v] + 1);
            p.blocks.assign(num_blocks, {});
            for (int v = 0; v < n; ++v)
                p.blocks[block_of[v]].push_back(v);
            visit(p);
        },
        oracle_bound);
}

ExactSolution solve_exact(const CostFunction& c, int oracle_bound)
{
    c.validate();
    std::vector<int> best;
    double best_value = 0.0;
    bool have_best = false;
    enumerate_block_assignments(
        c.n,
        [&](const std::vector<int>& block_of) {
            double value = evaluate_objective(c, block_of);
            if (!have_best || value < best_value) {
                have_best = true;
                best_value = value;
                best = block_of;
            }
        },
        oracle_bound);

    ExactSolution out;
    out.value = best_value;
    out.labeling = Labeling(c.n);
    for (int q = 1; q < c.n; ++q)
        for (int p = 0; p < q; ++p)
            out.labeling.pair(p, q) = best[p] == best[q] ? 1 : 0;
    return out;
}

} // namespace cubpart
