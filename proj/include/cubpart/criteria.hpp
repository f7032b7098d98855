#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubpart/core.hpp"
#include "cubpart/mincut.hpp"

namespace cubpart {

enum class Condition
{
    SubsetSeparation,
    EdgeCut,
    TripletCut,
    EdgeJoin,
    TripletJoin,
    TriangleEdgeJoin,
    PairSubgraphJoin,
    TripleSubgraphJoin,
    SubsetJoin,
};

std::string_view condition_name(Condition c);
std::optional<Condition> condition_from_name(std::string_view name);
std::vector<Condition> all_conditions();

enum class FixationKind
{
    PairZero,
    PairOne,
    TripleZero,
    TripleOne,
    BlockCut,
};

/// One recorded partial-optimality fact.  Pair kinds use elems[0..1],
/// triple kinds elems[0..2]; BlockCut carries the separated subset in
/// block.  witness holds the subset certifying the condition, if any.
struct Fixation
{
    FixationKind kind = FixationKind::PairZero;
    std::array<int, 3> elems{-1, -1, -1};
    std::vector<int> block;
    std::vector<int> witness;
    Condition source = Condition::SubsetSeparation;
};

/// Greedily absorbs elements reachable through negative pair or triple
/// costs, emitting blocks whose boundaries carry only nonnegative costs.
/// Seeds are taken in ascending element order; scans run in canonical
/// index order, so the output is deterministic.
Partition region_growing(const CostFunction& c);

/// True iff every pair cost on delta(r) and every triple cost touching
/// delta(r) is nonnegative, licensing separation of r from the rest.
bool check_subset_separation(const CostFunction& c, const std::vector<int>& r);

// The witness-search conditions take the folded pair weights as an
// argument so that a scan over all pairs or triples folds only once.
// neg_fold = fold with NegativePart, abs_fold = fold with AbsoluteValue.

std::optional<Fixation> find_edge_cut(const CostFunction& c, const PairWeights& neg_fold,
                                      int i, int j);
std::optional<Fixation> find_edge_cut(const CostFunction& c, int i, int j);

/// Tries all three choices of the isolated element.
std::optional<Fixation> find_triplet_cut(const CostFunction& c, const PairWeights& neg_fold,
                                         int i, int j, int k);
std::optional<Fixation> find_triplet_cut(const CostFunction& c, int i, int j, int k);

std::optional<Fixation> find_edge_join(const CostFunction& c, const PairWeights& abs_fold,
                                       int i, int j);
std::optional<Fixation> find_edge_join(const CostFunction& c, int i, int j);

/// Sums of positive parts over the whole instance, used by the triplet
/// join condition.
struct PositiveCostSums
{
    double pairs = 0.0;
    double triples = 0.0;
};
PositiveCostSums positive_cost_sums(const CostFunction& c);

/// Tries all three choices of the isolated element.
std::optional<Fixation> find_triplet_join(const CostFunction& c, const PairWeights& neg_fold,
                                          const PositiveCostSums& pos, int i, int j, int k);
std::optional<Fixation> find_triplet_join(const CostFunction& c, int i, int j, int k);

/// Tries all three choices of the middle element; on success fixes the
/// outer pair to 1.
std::optional<Fixation> find_triangle_edge_join(const CostFunction& c,
                                                const PairWeights& abs_fold,
                                                int i, int j, int k);
std::optional<Fixation> find_triangle_edge_join(const CostFunction& c, int i, int j, int k);

/// Local neighborhood sum test for joining one pair.
std::optional<Fixation> check_pair_subgraph_join(const CostFunction& c, int i, int j);

/// Seven-inequality test over a triple; tries all three middle choices
/// and on success fixes the outer pair to 1.
std::optional<Fixation> check_triple_subgraph_join(const CostFunction& c, int i, int j, int k);

/// Brute-force verifier of the general subgraph join condition for a
/// candidate subset s_h and pair i,j inside it.  Enumeration only; used
/// by tests to certify the pair and triple specializations.
bool check_general_subgraph_join_oracle(const CostFunction& c, const std::vector<int>& s_h,
                                        int i, int j, int oracle_bound = kDefaultOracleBound);

/// Heuristic witness search for joining a whole subset at once: seeds on
/// nonpositive pairs in ascending cost order, grows greedily while all
/// inner costs stay nonpositive, then certifies the candidate via a
/// global min cut of its interior.  Returns the pair fixations covering
/// the first certified block, or an empty vector.
std::vector<Fixation> find_subset_join(const CostFunction& c);

} // namespace cubpart
