// Acceptance suite: one self-contained check per release criterion, each
// printing a single PASS/FAIL line.  Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "cubpart/core.hpp"
#include "cubpart/criteria.hpp"
#include "cubpart/datasets.hpp"
#include "cubpart/engine.hpp"
#include "cubpart/mincut.hpp"
#include "cubpart/stats.hpp"
#include "oracles.hpp"

using namespace cubpart;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail)
{
    std::printf("criterion %2d %s  %s\n", criterion, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0)
{
    char buffer[160];
    std::snprintf(buffer, sizeof buffer, pattern, a, b);
    return buffer;
}

CostFunction regime_instance(oracles::TestRng& rng, int n, int regime)
{
    double shift = regime == 0 ? -0.6 : regime == 1 ? 0.6 : 0.0;
    return oracles::random_instance(rng, n, shift, 0.8);
}

// all block assignments of one instance with their objective values
struct AssignmentTable
{
    std::vector<std::vector<int>> assignments;
    std::vector<double> values;
    double global_min = std::numeric_limits<double>::infinity();

    explicit AssignmentTable(const CostFunction& c)
    {
        enumerate_block_assignments(c.n, [&](const std::vector<int>& block_of) {
            assignments.push_back(block_of);
            double v = evaluate_objective(c, block_of);
            values.push_back(v);
            global_min = std::min(global_min, v);
        });
    }

    double restricted_min(const std::function<bool(const std::vector<int>&)>& admit) const
    {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < assignments.size(); ++k)
            if (admit(assignments[k]))
                best = std::min(best, values[k]);
        return best;
    }
};

bool admits_fixation(const Fixation& f, const std::vector<int>& b)
{
    switch (f.kind) {
    case FixationKind::PairZero:
        return b[f.elems[0]] != b[f.elems[1]];
    case FixationKind::PairOne:
        return b[f.elems[0]] == b[f.elems[1]];
    case FixationKind::TripleZero:
        return !(b[f.elems[0]] == b[f.elems[1]] && b[f.elems[0]] == b[f.elems[2]]);
    case FixationKind::TripleOne:
        return b[f.elems[0]] == b[f.elems[1]] && b[f.elems[0]] == b[f.elems[2]];
    case FixationKind::BlockCut:
        for (std::size_t i = 0; i < f.block.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) {
                bool inside = false;
                for (int v : f.block)
                    if (static_cast<int>(j) == v)
                        inside = true;
                if (!inside && b[j] == b[f.block[i]])
                    return false;
            }
        return true;
    }
    return false;
}

bool consistent_with_state(const FixationState& state, const std::vector<int>& b)
{
    const int n = state.size();
    for (int q = 1; q < n; ++q)
        for (int p = 0; p < q; ++p) {
            bool joined = b[p] == b[q];
            if (state.pair_fixed_one(p, q) && !joined)
                return false;
            if (state.pair_fixed_zero(p, q) && joined)
                return false;
        }
    for (const auto& t : state.zero_triples())
        if (b[t[0]] == b[t[1]] && b[t[0]] == b[t[2]])
            return false;
    return true;
}

// ---------------------------------------------------------------- criteria

void criterion_1_oracle_bijection()
{
    const std::uint64_t expected[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
        std::uint64_t counted = oracles::count_feasible_labelings(n);
        ok = ok && counted == bell_number(n) && counted == expected[n];
    }
    report(1, ok, "feasible labeling counts equal Bell numbers for n in 1..8");
}

void criterion_2_fold_identity()
{
    oracles::TestRng rng(201);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + rng.below(8); // up to 10
        CostFunction c = oracles::random_instance(rng, n);
        std::uint32_t mask = rng.next() & ((1u << n) - 1);
        double triple_side = 0.0;
        for (int r = 2; r < n; ++r)
            for (int q = 1; q < r; ++q)
                for (int p = 0; p < q; ++p) {
                    int inside = ((mask >> p) & 1u) + ((mask >> q) & 1u) + ((mask >> r) & 1u);
                    if (inside >= 1 && inside <= 2)
                        triple_side += c.triple(p, q, r);
                }
        double pair_side = 0.0;
        for (int q = 1; q < n; ++q)
            for (int p = 0; p < q; ++p)
                if (((mask >> p) & 1u) != ((mask >> q) & 1u)) {
                    double inner = 0.0;
                    for (int r = 0; r < n; ++r)
                        if (r != p && r != q)
                            inner += c.triple(p, q, r);
                    pair_side += 0.5 * inner;
                }
        worst = std::max(worst, std::fabs(triple_side - pair_side));
    }
    report(2, worst <= 1e-9,
           fmt("triple-to-pair boundary identity, 200 random subsets, max residual %.2e", worst));
}

void criterion_3_pipeline_equivalence()
{
    oracles::TestRng rng(203);
    double worst_st = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + rng.below(10); // up to 12
        PairWeights w(n);
        for (double& v : w.w)
            v = std::fabs(rng.normal());
        int source = rng.below(n);
        std::vector<int> zero_side{(source + 1 + rng.below(n - 1)) % n};
        if (rng.below(2) && n > 3) {
            int second = (source + 1 + rng.below(n - 1)) % n;
            if (second != zero_side[0])
                zero_side.push_back(second);
        }
        std::sort(zero_side.begin(), zero_side.end());
        double got = min_constrained_cut(w, source, zero_side).value;
        double want = oracles::brute_constrained_cut(w, source, zero_side);
        worst_st = std::max(worst_st, std::fabs(got - want));
    }

    double worst_global = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + rng.below(11); // up to 12
        PairWeights w(n);
        for (double& v : w.w)
            v = std::fabs(rng.normal());
        double got = global_min_cut(w).value;
        double want = oracles::brute_global_cut(w);
        worst_global = std::max(worst_global, std::fabs(got - want));
    }
    report(3, worst_st <= 1e-9 && worst_global <= 1e-9,
           fmt("st-cut and global-cut equal subset enumeration, residuals %.2e / %.2e",
               worst_st, worst_global));
}

void criterion_4_and_5_condition_soundness()
{
    oracles::TestRng rng(205);
    long long fixation_count = 0;
    long long violations = 0;
    long long joint_violations = 0;
    for (int trial = 0; trial < 510; ++trial) {
        int n = 2 + rng.below(6); // up to 7
        CostFunction c = regime_instance(rng, n, trial % 3);
        AssignmentTable table(c);
        PairWeights neg = fold_triples_into_pairs(c, FoldTransform::NegativePart);
        PairWeights abs = fold_triples_into_pairs(c, FoldTransform::AbsoluteValue);
        PositiveCostSums pos = positive_cost_sums(c);

        std::vector<Fixation> fired;
        std::vector<Fixation> cut_facts;
        for (int q = 1; q < n; ++q)
            for (int p = 0; p < q; ++p) {
                if (auto f = find_edge_cut(c, neg, p, q)) {
                    fired.push_back(*f);
                    cut_facts.push_back(*f);
                }
                if (auto f = find_edge_join(c, abs, p, q))
                    fired.push_back(*f);
                if (auto f = check_pair_subgraph_join(c, p, q))
                    fired.push_back(*f);
            }
        for (int r = 2; r < n; ++r)
            for (int q = 1; q < r; ++q)
                for (int p = 0; p < q; ++p) {
                    if (auto f = find_triplet_cut(c, neg, p, q, r)) {
                        fired.push_back(*f);
                        cut_facts.push_back(*f);
                    }
                    if (auto f = find_triplet_join(c, neg, pos, p, q, r))
                        fired.push_back(*f);
                    if (auto f = find_triangle_edge_join(c, abs, p, q, r))
                        fired.push_back(*f);
                    if (auto f = check_triple_subgraph_join(c, p, q, r))
                        fired.push_back(*f);
                }

        // subset join concludes jointly for a whole block
        std::vector<Fixation> block = find_subset_join(c);
        if (!block.empty()) {
            fixation_count += static_cast<long long>(block.size());
            double joint = table.restricted_min([&](const std::vector<int>& b) {
                for (const Fixation& f : block)
                    if (!admits_fixation(f, b))
                        return false;
                return true;
            });
            if (joint != table.global_min)
                ++violations;
        }

        // region growing blocks license simultaneous separation
        Partition parts = region_growing(c);
        if (parts.blocks.size() > 1) {
            for (const auto& blk : parts.blocks)
                cut_facts.push_back(
                    {FixationKind::BlockCut, {-1, -1, -1}, blk, {}, Condition::SubsetSeparation});
        }

        fixation_count += static_cast<long long>(fired.size());
        for (const Fixation& f : fired) {
            double restricted = table.restricted_min(
                [&](const std::vector<int>& b) { return admits_fixation(f, b); });
            if (restricted != table.global_min)
                ++violations;
        }

        // all cut facts inserted at once must stay compatible
        FixationState cuts(n);
        apply_cut_fixations(cuts, cut_facts);
        double joint_cut = table.restricted_min(
            [&](const std::vector<int>& b) { return consistent_with_state(cuts, b); });
        if (joint_cut != table.global_min)
            ++joint_violations;
    }
    report(4, violations == 0,
           fmt("per-condition persistency, %.0f fixations over 510 instances, %.0f violations",
               static_cast<double>(fixation_count), static_cast<double>(violations)));
    report(5, joint_violations == 0,
           fmt("joint cut insertion keeps the optimum attainable, %.0f violations",
               static_cast<double>(joint_violations)));
}

void criterion_6_contraction()
{
    oracles::TestRng rng(207);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + rng.below(5); // up to 7
        CostFunction c = regime_instance(rng, n, trial % 3);
        int i = rng.below(n);
        int j = (i + 1 + rng.below(n - 1)) % n;
        FixationState scratch(n);
        ReducedInstance smaller =
            contract_pair(make_root_instance(c), i, j, scratch, Condition::EdgeJoin);
        double restricted = oracles::restricted_minimum(
            c, [&](const std::vector<int>& b) { return b[i] == b[j]; });
        double contracted = solve_exact(smaller.costs).value;
        worst = std::max(worst, std::fabs(restricted - contracted));
    }
    report(6, worst <= 1e-9,
           fmt("contraction preserves the joined optimum, 200 cases, max residual %.2e", worst));
}

void criterion_7_counterexample_guard()
{
    CostFunction c(3);
    c.triple(0, 1, 2) = 5.0;
    c.pair(0, 1) = c.pair(0, 2) = c.pair(1, 2) = -2.0;
    PreprocessResult result = preprocess(c);
    AssignmentTable table(c);
    double admitted = table.restricted_min(
        [&](const std::vector<int>& b) { return consistent_with_state(result.state, b); });
    int merged = result.state.pair_fixed_one(0, 1) + result.state.pair_fixed_one(0, 2)
                 + result.state.pair_fixed_one(1, 2);
    report(7, admitted == -2.0 && merged <= 1,
           fmt("counterexample instance keeps optimum %.0f with %.0f merged pairs",
               admitted, static_cast<double>(merged)));
}

void criterion_8_end_to_end()
{
    oracles::TestRng rng(209);
    long long violations = 0;
    double worst_reconstruction = 0.0;
    int runs = 0;
    auto check = [&](const CostFunction& c) {
        ++runs;
        PreprocessResult result = preprocess(c);
        AssignmentTable table(c);
        double admitted = table.restricted_min(
            [&](const std::vector<int>& b) { return consistent_with_state(result.state, b); });
        if (admitted != table.global_min)
            ++violations;
        double reconstructed = result.constant_shift;
        for (const auto& leaf : result.leaves)
            reconstructed += solve_exact(leaf.costs).value;
        worst_reconstruction =
            std::max(worst_reconstruction, std::fabs(reconstructed - table.global_min));
    };

    for (int trial = 0; trial < 300; ++trial)
        check(regime_instance(rng, 2 + rng.below(6), trial % 3));
    // extra coverage on both dataset families at oracle scale
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        double alpha = 0.25 + 0.05 * static_cast<double>(seed % 10);
        double beta = (seed % 3) * 0.5;
        check(generate_partition_instance({1, alpha, beta, seed}));
    }
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        GeometricDatasetParams params;
        params.sigma = seed % 2 ? 0.1 : 0.01;
        params.points_per_vertex = 1; // 9 points, still oracle scale
        params.seed = seed;
        check(generate_geometric_instance(params).costs);
    }
    report(8, violations == 0 && worst_reconstruction <= 1e-9,
           fmt("%.0f engine runs: optimum admitted (%.0f violations), reconstruction residual",
               static_cast<double>(runs), static_cast<double>(violations))
               + fmt(" %.2e", worst_reconstruction));
}

std::vector<double> sweep_medians(double beta, const std::vector<double>& alphas)
{
    std::vector<double> medians;
    for (double alpha : alphas) {
        std::vector<double> pct;
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            CostFunction c = generate_partition_instance({1, alpha, beta, seed});
            pct.push_back(preprocess(c).report.pairs_fixed_pct);
        }
        medians.push_back(quantile(pct, 0.5));
    }
    return medians;
}

void criterion_9_partition_trend()
{
    std::vector<double> alphas;
    for (int k = 0; k <= 9; ++k)
        alphas.push_back(0.25 + 0.05 * k);

    bool ok = true;
    std::string detail = "alpha sweep medians:";
    for (double beta : {0.0, 0.5, 1.0}) {
        std::vector<double> medians = sweep_medians(beta, alphas);
        int inversions = 0;
        double worst_jump = 0.0;
        for (std::size_t k = 1; k < medians.size(); ++k)
            if (medians[k] > medians[k - 1] + 1e-12) {
                ++inversions;
                worst_jump = std::max(worst_jump, medians[k] - medians[k - 1]);
            }
        bool monotone_enough = inversions <= 1 && worst_jump <= 5.0;
        bool anchored = beta != 0.0 || medians.front() >= 95.0;
        ok = ok && monotone_enough && anchored;
        detail += fmt(" beta=%.1f first=%.0f", beta, medians.front());
        detail += fmt(" last=%.0f", medians.back());
    }
    report(9, ok, detail);
}

void criterion_10_geometric_trend()
{
    auto median_for = [](double sigma) {
        std::vector<double> pct;
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            GeometricDatasetParams params;
            params.sigma = sigma;
            params.points_per_vertex = 2; // 18 points
            params.seed = seed;
            pct.push_back(preprocess(generate_geometric_instance(params).costs)
                              .report.pairs_fixed_pct);
        }
        return quantile(pct, 0.5);
    };
    double low = median_for(0.01);
    double high = median_for(0.10);
    report(10, low - high >= 10.0,
           fmt("geometric medians: %.1f%% at sigma=0.01 vs %.1f%% at sigma=0.10", low, high));
}

void criterion_11_subset_join_dominance()
{
    const std::vector<Condition> joins{Condition::SubsetJoin,
                                       Condition::EdgeJoin,
                                       Condition::TriangleEdgeJoin,
                                       Condition::PairSubgraphJoin,
                                       Condition::TripleSubgraphJoin,
                                       Condition::TripletJoin};
    auto pct_with_only = [&](const CostFunction& c, Condition cond) {
        PreprocessConfig cfg;
        cfg.enabled = {cond};
        return preprocess(c, cfg).report.pairs_fixed_pct;
    };

    int dominated = 0, total = 0;
    auto tally = [&](const CostFunction& c) {
        ++total;
        double subset = 0.0, best_other = 0.0;
        for (Condition cond : joins) {
            double pct = pct_with_only(c, cond);
            if (cond == Condition::SubsetJoin)
                subset = pct;
            else
                best_other = std::max(best_other, pct);
        }
        if (subset >= best_other)
            ++dominated;
    };

    for (double alpha : {0.25, 0.45, 0.65})
        for (double beta : {0.0, 0.5, 1.0})
            for (std::uint64_t seed = 0; seed < 5; ++seed)
                tally(generate_partition_instance({1, alpha, beta, seed}));
    for (double sigma : {0.01, 0.05, 0.10})
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            GeometricDatasetParams params;
            params.sigma = sigma;
            params.points_per_vertex = 2;
            params.seed = seed;
            tally(generate_geometric_instance(params).costs);
        }

    double share = 100.0 * dominated / total;
    report(11, share >= 80.0,
           fmt("subset join fixes at least as much as any other join on %.0f%% of %.0f instances",
               share, static_cast<double>(total)));
}

} // namespace

int main()
{
    auto started = std::chrono::steady_clock::now();
    criterion_1_oracle_bijection();
    criterion_2_fold_identity();
    criterion_3_pipeline_equivalence();
    criterion_4_and_5_condition_soundness();
    criterion_6_contraction();
    criterion_7_counterexample_guard();
    criterion_8_end_to_end();
    criterion_9_partition_trend();
    criterion_10_geometric_trend();
    criterion_11_subset_join_dominance();
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
    std::printf("%d criterion(s) failed, total runtime %.1f s\n", failures, elapsed.count());
    return failures;
}
