#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cubpart/indexing.hpp"

namespace cubpart {

/// Largest ground set the exhaustive solver and partition enumeration
/// accept by default (Bell(12) is about 4.2 million partitions).
inline constexpr int kDefaultOracleBound = 12;

/// Dense real-valued costs over all pairs, all triples and the constant
/// term of a ground set {0, ..., n-1}.
struct CostFunction
{
    int n = 0;
    double constant = 0.0;
    std::vector<double> pair_costs;   // length n*(n-1)/2, colex-indexed
    std::vector<double> triple_costs; // length n*(n-1)*(n-2)/6, colex-indexed

    CostFunction() = default;
    explicit CostFunction(int n_elements);

    double pair(int a, int b) const { return pair_costs[pair_index(a, b)]; }
    double& pair(int a, int b) { return pair_costs[pair_index(a, b)]; }
    double triple(int a, int b, int c) const { return triple_costs[triple_index(a, b, c)]; }
    double& triple(int a, int b, int c) { return triple_costs[triple_index(a, b, c)]; }

    /// Throws if sizes are inconsistent or any stored value is not finite.
    void validate() const;
};

/// 0/1 vector over unordered pairs; feasible iff it is the co-clustering
/// indicator of some partition (no triple has exactly two pairs joined).
struct Labeling
{
    int n = 0;
    std::vector<std::uint8_t> x; // length n*(n-1)/2, colex-indexed

    Labeling() = default;
    explicit Labeling(int n_elements);

    std::uint8_t pair(int a, int b) const { return x[pair_index(a, b)]; }
    std::uint8_t& pair(int a, int b) { return x[pair_index(a, b)]; }

    bool is_feasible() const;
};

/// Partition of {0, ..., n-1} into disjoint nonempty blocks.
struct Partition
{
    int n = 0;
    std::vector<std::vector<int>> blocks;

    /// Throws unless blocks are nonempty, disjoint and cover {0, ..., n-1}.
    void validate() const;
};

/// Objective value: triples, then pairs, then the constant, each group
/// summed left to right in canonical index order.  All evaluators in the
/// project use this exact order so that values compare bit for bit.
double evaluate_objective(const CostFunction& c, const Labeling& x);

/// Same value (same summation order) from a block-id assignment per element.
double evaluate_objective(const CostFunction& c, const std::vector<int>& block_of);

Labeling labeling_from_partition(const Partition& p);

/// Inverse of labeling_from_partition; throws on infeasible input.
/// Blocks come out ordered by their smallest element.
Partition partition_from_labeling(const Labeling& x);

/// Bell numbers via the Bell triangle; n up to 25 (uint64 range).
std::uint64_t bell_number(int n);

/// Visits every partition of {0, ..., n-1} exactly once, in lexicographic
/// order of the restricted-growth string.  The first partition visited is
/// the single block {0, ..., n-1}.
void enumerate_partitions(int n,
                          const std::function<void(const Partition&)>& visit,
                          int oracle_bound = kDefaultOracleBound);

/// Lighter variant handing out the block id per element instead of
/// materialized blocks; same order as enumerate_partitions.
void enumerate_block_assignments(int n,
                                 const std::function<void(const std::vector<int>&)>& visit,
                                 int oracle_bound = kDefaultOracleBound);

struct ExactSolution
{
    Labeling labeling;
    double value = 0.0;
};

/// Exhaustive minimization of the objective over all partitions.  Ties are
/// broken by the first minimizer in enumeration order.
ExactSolution solve_exact(const CostFunction& c, int oracle_bound = kDefaultOracleBound);

} // namespace cubpart
