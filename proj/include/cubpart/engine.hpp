#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cubpart/core.hpp"
#include "cubpart/criteria.hpp"

namespace cubpart {

/// Accumulated partial-optimality facts over the original ground set:
/// a merge structure for pairs fixed to 1, recorded pair cuts, and
/// recorded zero triples.  Facts recorded on merged classes lift to the
/// final classes when counting.
class FixationState
{
public:
    explicit FixationState(int n_elements);

    int size() const { return n_; }
    int find(int v) const;
    bool same_class(int a, int b) const { return find(a) == find(b); }

    /// Applies one fixation: merges for the one-kinds, cut records for
    /// the zero-kinds, boundary cuts for BlockCut.  Re-recording a known
    /// fact is a no-op; a contradictory fact throws.
    void apply(const Fixation& f);

    /// Cut facts whose ground set is a sub-instance rather than the whole
    /// original set: records zeros for all pairs between block and rest.
    void apply_block_cut(const std::vector<int>& block, const std::vector<int>& rest,
                         Condition source);

    const std::vector<Fixation>& log() const { return log_; }

    bool pair_fixed_one(int p, int q) const { return same_class(p, q); }
    bool pair_fixed_zero(int p, int q) const;
    bool pair_fixed(int p, int q) const { return pair_fixed_one(p, q) || pair_fixed_zero(p, q); }

    /// A triple is fixed when all three elements share a class, when any
    /// of its pairs is fixed to zero, or when a zero record covers it.
    bool triple_fixed(int p, int q, int r) const;

    long long count_fixed_pairs() const;
    long long count_fixed_triples() const;

    /// Recorded zero triples, lifted nowhere (original element ids).
    const std::vector<std::array<int, 3>>& zero_triples() const { return zero_triples_; }

private:
    void merge(int a, int b);
    void add_cut(int a, int b);
    void refresh_lifted() const;

    int n_;
    mutable std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<std::pair<int, int>> cut_pairs_;          // as recorded
    std::vector<std::array<int, 3>> zero_triples_;        // as recorded
    std::vector<Fixation> log_;
    mutable bool lifted_fresh_ = false;
    mutable std::set<std::pair<int, int>> lifted_cuts_;   // class-level keys
    mutable std::set<std::array<int, 3>> lifted_zeros_;   // class-level keys
};

/// Joint insertion of cut-type fixations (pair zeros, zero triples, block
/// cuts); rejects one-kinds.
void apply_cut_fixations(FixationState& state, const std::vector<Fixation>& fixes);

/// A working instance over surviving elements; origin maps each current
/// element to an original element of its merge class.
struct ReducedInstance
{
    CostFunction costs;
    std::vector<int> origin;
};

ReducedInstance make_root_instance(const CostFunction& c);

/// Contracts current elements i and j (j disappears, costs folded onto i),
/// recording the merge; throws if the pair is fixed to zero.
ReducedInstance contract_pair(const ReducedInstance& inst, int i, int j,
                              FixationState& state, Condition source);

/// Splits an instance along a partition with nonnegative block boundaries.
/// Children keep only within-block costs and start with constant 0; the
/// parent constant stays with the caller.  Cross-block pairs are recorded
/// as zeros.  A single-block partition returns the instance unchanged.
std::vector<ReducedInstance> decompose(const ReducedInstance& inst, const Partition& parts,
                                       FixationState& state);

struct PreprocessConfig
{
    /// Join conditions in the order they are attempted.
    std::vector<Condition> join_order{
        Condition::SubsetJoin,        Condition::EdgeJoin,
        Condition::TriangleEdgeJoin,  Condition::PairSubgraphJoin,
        Condition::TripleSubgraphJoin, Condition::TripletJoin,
    };
    /// Conditions allowed to run; everything else is skipped.
    std::set<Condition> enabled{
        Condition::SubsetSeparation, Condition::EdgeCut,
        Condition::TripletCut,       Condition::EdgeJoin,
        Condition::TripletJoin,      Condition::TriangleEdgeJoin,
        Condition::PairSubgraphJoin, Condition::TripleSubgraphJoin,
        Condition::SubsetJoin};
    /// When nonnegative, the two expensive triple join scans are skipped
    /// on instances larger than this.
    int expensive_size_limit = -1;
};

struct RunReport
{
    int n = 0;
    double pairs_fixed_pct = 0.0;
    double triples_fixed_pct = 0.0;
    std::map<std::string, long long> per_condition;
    double elapsed_ms = 0.0;
    std::vector<std::string> disabled;
};

struct PreprocessResult
{
    FixationState state;
    std::vector<ReducedInstance> leaves;
    double constant_shift = 0.0; // released by decompositions
    RunReport report;
};

/// Runs the recursive schedule: separate via region growing, decompose,
/// try join conditions in order and contract on the first success, then
/// record the remaining cut conditions jointly.
PreprocessResult preprocess(const CostFunction& c, const PreprocessConfig& cfg = {});

} // namespace cubpart
