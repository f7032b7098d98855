#pragma once

#include <cstdint>
#include <vector>

#include "cubpart/core.hpp"

namespace cubpart {

/// Symmetric nonnegative-or-signed weights over unordered pairs.
struct PairWeights
{
    int n = 0;
    std::vector<double> w; // colex-indexed, length n*(n-1)/2

    PairWeights() = default;
    explicit PairWeights(int n_elements);

    double pair(int a, int b) const { return w[pair_index(a, b)]; }
    double& pair(int a, int b) { return w[pair_index(a, b)]; }
};

enum class FoldTransform
{
    Identity,
    NegativePart,
    AbsoluteValue,
};

/// Moves triple costs onto pair weights:
///   w_pq = f(c_pq) + 1/2 * sum_{r != p,q} f(c_pqr).
/// For every subset R, the boundary sum of w over delta(R) then equals
/// sum_{T_delta(R)} f(c) + sum_{delta(R)} f(c).
PairWeights fold_triples_into_pairs(const CostFunction& c, FoldTransform transform);

/// Quadratic pseudo-boolean objective over a reduced variable set.  The
/// same struct carries both the product form
///   sum quadratic_pq y_p y_q + sum linear_p y_p + constant
/// and, after qpbo_to_posiform, the normalized form
///   sum quadratic_pq [y_p(1-y_q) + y_q(1-y_p)]
///   + sum_{linear_p>0} linear_p y_p - sum_{linear_p<0} linear_p (1-y_p)
///   + constant.
struct QpboInstance
{
    std::vector<int> vars;        // ids of the free variables
    std::vector<double> linear;   // per variable position
    std::vector<double> quadratic;// colex-indexed over variable positions
    double constant = 0.0;
};

double evaluate_qpbo(const QpboInstance& q, const std::vector<std::uint8_t>& y);
double evaluate_posiform(const QpboInstance& q, const std::vector<std::uint8_t>& y);

/// Encodes min over R with source in R and zero_side disjoint from R of
/// the boundary sum of w as an unconstrained QPBO over the remaining
/// elements; y = 1 marks membership in R.
QpboInstance constrained_cut_to_qpbo(const PairWeights& w, int source,
                                     const std::vector<int>& zero_side);

/// Rewrites the product form into the posiform whose quadratic
/// coefficients are nonnegative whenever the input quadratics are
/// nonpositive; objective values agree pointwise.
QpboInstance qpbo_to_posiform(const QpboInstance& q);

struct FlowNetwork
{
    struct Arc
    {
        int from = -1;
        int to = -1;
        double capacity = 0.0;
    };

    int node_count = 0;
    int source = -1;
    int sink = -1;
    std::vector<Arc> arcs;
};

/// Builds the st-network whose minimum cut equals the posiform minimum
/// minus its constant.  Throws if any capacity would be negative.
FlowNetwork posiform_to_network(const QpboInstance& q);

struct StCutResult
{
    double value = 0.0;      // capacity across the returned cut
    double flow_value = 0.0; // maximum flow; equals value up to rounding
    std::vector<int> source_side; // sorted, contains the source
};

/// Push-relabel maximum flow; the returned cut is the source-reachable
/// set of the final residual network (residuals below 1e-9 count as
/// saturated).
StCutResult min_st_cut(const FlowNetwork& net);

struct GlobalCutResult
{
    double value = 0.0;
    std::vector<int> one_side; // sorted, nonempty proper subset, contains 0
};

/// Stoer-Wagner minimum cut over nonnegative pair weights, n >= 2.
GlobalCutResult global_min_cut(const PairWeights& w);

struct WitnessCut
{
    double value = 0.0;       // boundary sum of w over delta(subset)
    std::vector<int> subset;  // sorted, contains source, disjoint from zero_side
};

/// Full witness search pipeline over nonnegative weights: QPBO encoding,
/// posiform, st-network, push-relabel.  The value is recomputed directly
/// from the returned subset in canonical pair order.
WitnessCut min_constrained_cut(const PairWeights& w, int source,
                               const std::vector<int>& zero_side);

} // namespace cubpart
