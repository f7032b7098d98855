#include "cubpart/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "cubpart/maps.hpp"

namespace cubpart {

std::string_view condition_name(Condition c)
{
    switch (c) {
    case Condition::SubsetSeparation: return "subset-separation";
    case Condition::EdgeCut: return "edge-cut";
    case Condition::TripletCut: return "triplet-cut";
    case Condition::EdgeJoin: return "edge-join";
    case Condition::TripletJoin: return "triplet-join";
    case Condition::TriangleEdgeJoin: return "triangle-edge-join";
    case Condition::PairSubgraphJoin: return "pair-subgraph-join";
    case Condition::TripleSubgraphJoin: return "triple-subgraph-join";
    case Condition::SubsetJoin: return "subset-join";
    }
    throw std::invalid_argument("unknown condition");
}

std::optional<Condition> condition_from_name(std::string_view name)
{
    for (Condition c : all_conditions())
        if (condition_name(c) == name)
            return c;
    return std::nullopt;
}

std::vector<Condition> all_conditions()
{
    return {Condition::SubsetSeparation, Condition::EdgeCut,        Condition::TripletCut,
            Condition::EdgeJoin,         Condition::TripletJoin,    Condition::TriangleEdgeJoin,
            Condition::PairSubgraphJoin, Condition::TripleSubgraphJoin,
            Condition::SubsetJoin};
}

namespace {

void check_distinct(int n, std::initializer_list<int> elems)
{
    for (int v : elems)
        if (v < 0 || v >= n)
            throw std::invalid_argument("element out of range");
    std::vector<int> sorted(elems);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("elements must be distinct");
}

std::array<int, 3> sorted_triple(int i, int j, int k)
{
    std::array<int, 3> t{i, j, k};
    std::sort(t.begin(), t.end());
    return t;
}

} // namespace

Partition region_growing(const CostFunction& c)
{
    const int n = c.n;
    std::vector<char> assigned(n, 0);
    Partition out;
    out.n = n;

    for (int seed = 0; seed < n; ++seed) {
        if (assigned[seed])
            continue;
        std::vector<char> in_r(n, 0);
        std::vector<int> members{seed};
        in_r[seed] = 1;
        assigned[seed] = 1;

        auto absorb = [&](int v) {
            if (!in_r[v]) {
                in_r[v] = 1;
                assigned[v] = 1;
                members.push_back(v);
            }
        };

        bool changed = true;
        while (changed) {
            changed = false;
            for (int q = 1; q < n && !changed; ++q)
                for (int p = 0; p < q; ++p)
                    if (in_r[p] != in_r[q] && c.pair_costs[pair_rank(p, q)] < 0.0) {
                        absorb(p);
                        absorb(q);
                        changed = true;
                        break;
                    }
            if (changed)
                continue;
            for (int r = 2; r < n && !changed; ++r)
                for (int q = 1; q < r && !changed; ++q)
                    for (int p = 0; p < q; ++p) {
                        int inside = in_r[p] + in_r[q] + in_r[r];
                        if (inside >= 1 && inside <= 2
                            && c.triple_costs[triple_rank(p, q, r)] < 0.0) {
                            absorb(p);
                            absorb(q);
                            absorb(r);
                            changed = true;
                            break;
                        }
                    }
        }
        std::sort(members.begin(), members.end());
        out.blocks.push_back(std::move(members));
    }
    return out;
}

bool check_subset_separation(const CostFunction& c, const std::vector<int>& r)
{
    validate_subset(c.n, r);
    if (r.empty())
        throw std::invalid_argument("subset must be nonempty");
    std::vector<char> in_r(c.n, 0);
    for (int v : r)
        in_r[v] = 1;

    for (int q = 1; q < c.n; ++q)
        for (int p = 0; p < q; ++p)
            if (in_r[p] != in_r[q] && c.pair_costs[pair_rank(p, q)] < 0.0)
                return false;
    for (int rr = 2; rr < c.n; ++rr)
        for (int q = 1; q < rr; ++q)
            for (int p = 0; p < q; ++p) {
                int inside = in_r[p] + in_r[q] + in_r[rr];
                if (inside >= 1 && inside <= 2 && c.triple_costs[triple_rank(p, q, rr)] < 0.0)
                    return false;
            }
    return true;
}

std::optional<Fixation> find_edge_cut(const CostFunction& c, const PairWeights& neg_fold,
                                      int i, int j)
{
    check_distinct(c.n, {i, j});
    WitnessCut cut = min_constrained_cut(neg_fold, i, {j});
    if (positive_part(c.pair(i, j)) >= cut.value) {
        Fixation f;
        f.kind = FixationKind::PairZero;
        f.elems = {std::min(i, j), std::max(i, j), -1};
        f.witness = cut.subset;
        f.source = Condition::EdgeCut;
        return f;
    }
    return std::nullopt;
}

std::optional<Fixation> find_edge_cut(const CostFunction& c, int i, int j)
{
    return find_edge_cut(c, fold_triples_into_pairs(c, FoldTransform::NegativePart), i, j);
}

std::optional<Fixation> find_triplet_cut(const CostFunction& c, const PairWeights& neg_fold,
                                         int i, int j, int k)
{
    check_distinct(c.n, {i, j, k});
    auto t = sorted_triple(i, j, k);
    double triple_pos = positive_part(c.triple(i, j, k));
    for (int rot = 0; rot < 3; ++rot) {
        int isolated = t[rot];
        int other1 = t[(rot + 1) % 3];
        int other2 = t[(rot + 2) % 3];
        if (other1 > other2)
            std::swap(other1, other2);
        double lhs = triple_pos + positive_part(c.pair(isolated, other1))
                     + positive_part(c.pair(isolated, other2));
        WitnessCut cut = min_constrained_cut(neg_fold, isolated, {other1, other2});
        if (lhs >= cut.value) {
            Fixation f;
            f.kind = FixationKind::TripleZero;
            f.elems = {t[0], t[1], t[2]};
            f.witness = cut.subset;
            f.source = Condition::TripletCut;
            return f;
        }
    }
    return std::nullopt;
}

std::optional<Fixation> find_triplet_cut(const CostFunction& c, int i, int j, int k)
{
    return find_triplet_cut(c, fold_triples_into_pairs(c, FoldTransform::NegativePart), i, j, k);
}

std::optional<Fixation> find_edge_join(const CostFunction& c, const PairWeights& abs_fold,
                                       int i, int j)
{
    check_distinct(c.n, {i, j});
    double lhs = 2.0 * negative_part(c.pair(i, j));
    for (int r = 0; r < c.n; ++r)
        if (r != i && r != j)
            lhs += negative_part(c.triple(i, j, r));
    WitnessCut cut = min_constrained_cut(abs_fold, i, {j});
    if (lhs >= cut.value) {
        Fixation f;
        f.kind = FixationKind::PairOne;
        f.elems = {std::min(i, j), std::max(i, j), -1};
        f.witness = cut.subset;
        f.source = Condition::EdgeJoin;
        return f;
    }
    return std::nullopt;
}

std::optional<Fixation> find_edge_join(const CostFunction& c, int i, int j)
{
    return find_edge_join(c, fold_triples_into_pairs(c, FoldTransform::AbsoluteValue), i, j);
}

PositiveCostSums positive_cost_sums(const CostFunction& c)
{
    PositiveCostSums sums;
    for (double v : c.pair_costs)
        sums.pairs += positive_part(v);
    for (double v : c.triple_costs)
        sums.triples += positive_part(v);
    return sums;
}

std::optional<Fixation> find_triplet_join(const CostFunction& c, const PairWeights& neg_fold,
                                          const PositiveCostSums& pos, int i, int j, int k)
{
    check_distinct(c.n, {i, j, k});
    auto t = sorted_triple(i, j, k);
    // cheapest way to keep the triple apart: all separate or one pair joined
    double inner_min = std::min({0.0, c.pair(t[0], t[1]), c.pair(t[0], t[2]),
                                 c.pair(t[1], t[2])});
    double triple_neg = negative_part(c.triple(i, j, k));
    for (int rot = 0; rot < 3; ++rot) {
        int isolated = t[rot];
        int other1 = t[(rot + 1) % 3];
        int other2 = t[(rot + 2) % 3];
        if (other1 > other2)
            std::swap(other1, other2);
        double lhs = 2.0 * triple_neg + 2.0 * negative_part(c.pair(isolated, other1))
                     + 2.0 * negative_part(c.pair(isolated, other2))
                     + negative_part(c.pair(other1, other2)) - pos.triples - pos.pairs
                     + inner_min;
        WitnessCut cut = min_constrained_cut(neg_fold, isolated, {other1, other2});
        if (lhs >= cut.value) {
            Fixation f;
            f.kind = FixationKind::TripleOne;
            f.elems = {t[0], t[1], t[2]};
            f.witness = cut.subset;
            f.source = Condition::TripletJoin;
            return f;
        }
    }
    return std::nullopt;
}

std::optional<Fixation> find_triplet_join(const CostFunction& c, int i, int j, int k)
{
    return find_triplet_join(c, fold_triples_into_pairs(c, FoldTransform::NegativePart),
                             positive_cost_sums(c), i, j, k);
}

namespace {

/// Negative pair costs crossing the triple plus negative costs of triples
/// with exactly one element inside.
double outer_negative_sum_strict(const CostFunction& c, const std::array<int, 3>& t)
{
    std::vector<char> in_t(c.n, 0);
    for (int v : t)
        in_t[v] = 1;
    double sum = 0.0;
    for (int m : t)
        for (int v = 0; v < c.n; ++v)
            if (!in_t[v])
                sum += std::min(c.pair(m, v), 0.0);
    for (int m : t)
        for (int w = 1; w < c.n; ++w)
            for (int v = 0; v < w; ++v)
                if (!in_t[v] && !in_t[w])
                    sum += std::min(c.triple(m, v, w), 0.0);
    return sum;
}

/// Negative pair costs crossing the triple plus negative costs of all
/// triples with one or two elements inside.
double outer_negative_sum_full(const CostFunction& c, const std::array<int, 3>& t)
{
    double sum = outer_negative_sum_strict(c, t);
    std::vector<char> in_t(c.n, 0);
    for (int v : t)
        in_t[v] = 1;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            for (int v = 0; v < c.n; ++v)
                if (!in_t[v])
                    sum += std::min(c.triple(t[a], t[b], v), 0.0);
    return sum;
}

} // namespace

std::optional<Fixation> find_triangle_edge_join(const CostFunction& c,
                                                const PairWeights& abs_fold,
                                                int i, int j, int k)
{
    check_distinct(c.n, {i, j, k});
    auto t = sorted_triple(i, j, k);
    double ct = c.triple(i, j, k);

    // the total-join requirement does not depend on the choice of roles
    double join_lhs = ct + c.pair(t[0], t[1]) + c.pair(t[0], t[2]) + c.pair(t[1], t[2]);
    if (!(join_lhs <= outer_negative_sum_strict(c, t)))
        return std::nullopt;

    for (int rot = 0; rot < 3; ++rot) {
        int middle = t[rot];
        int u = t[(rot + 1) % 3];
        int v = t[(rot + 2) % 3];
        if (u > v)
            std::swap(u, v);

        double lhs1 = negative_part(ct) + 2.0 * negative_part(c.pair(u, middle))
                      + 2.0 * negative_part(c.pair(u, v)) + negative_part(ct);
        for (int r = 0; r < c.n; ++r)
            if (r != t[0] && r != t[1] && r != t[2])
                lhs1 += negative_part(c.triple(u, middle, r))
                        + negative_part(c.triple(u, v, r));
        WitnessCut cut1 = min_constrained_cut(abs_fold, u, {std::min(middle, v), std::max(middle, v)});
        if (lhs1 < cut1.value)
            continue;

        double lhs2 = negative_part(ct) + 2.0 * negative_part(c.pair(middle, v))
                      + 2.0 * negative_part(c.pair(u, v)) + negative_part(ct);
        for (int r = 0; r < c.n; ++r)
            if (r != t[0] && r != t[1] && r != t[2])
                lhs2 += negative_part(c.triple(middle, v, r))
                        + negative_part(c.triple(u, v, r));
        WitnessCut cut2 = min_constrained_cut(abs_fold, v, {std::min(u, middle), std::max(u, middle)});
        if (lhs2 < cut2.value)
            continue;

        Fixation f;
        f.kind = FixationKind::PairOne;
        f.elems = {u, v, -1};
        f.witness = cut1.subset;
        f.source = Condition::TriangleEdgeJoin;
        return f;
    }
    return std::nullopt;
}

std::optional<Fixation> find_triangle_edge_join(const CostFunction& c, int i, int j, int k)
{
    return find_triangle_edge_join(c, fold_triples_into_pairs(c, FoldTransform::AbsoluteValue),
                                   i, j, k);
}

std::optional<Fixation> check_pair_subgraph_join(const CostFunction& c, int i, int j)
{
    check_distinct(c.n, {i, j});
    int a = std::min(i, j), b = std::max(i, j);
    double rhs = 0.0;
    for (int v = 0; v < c.n; ++v)
        if (v != a && v != b)
            rhs += std::min(c.pair(a, v), 0.0) + std::min(c.pair(b, v), 0.0);
    for (int r = 0; r < c.n; ++r)
        if (r != a && r != b)
            rhs += std::min(c.triple(a, b, r), 0.0);
    for (int w = 1; w < c.n; ++w)
        for (int v = 0; v < w; ++v)
            if (v != a && v != b && w != a && w != b)
                rhs += std::min(c.triple(a, v, w), 0.0) + std::min(c.triple(b, v, w), 0.0);

    if (c.pair(a, b) <= rhs) {
        Fixation f;
        f.kind = FixationKind::PairOne;
        f.elems = {a, b, -1};
        f.source = Condition::PairSubgraphJoin;
        return f;
    }
    return std::nullopt;
}

std::optional<Fixation> check_triple_subgraph_join(const CostFunction& c, int i, int j, int k)
{
    check_distinct(c.n, {i, j, k});
    auto t = sorted_triple(i, j, k);
    double ct = c.triple(i, j, k);
    double boundary = outer_negative_sum_full(c, t);

    for (int rot = 0; rot < 3; ++rot) {
        int middle = t[rot];
        int u = t[(rot + 1) % 3];
        int v = t[(rot + 2) % 3];
        if (u > v)
            std::swap(u, v);
        double c_um = c.pair(u, middle);
        double c_uv = c.pair(u, v);
        double c_mv = c.pair(middle, v);
        bool ok = c_um + c_uv <= 0.0 && c_um + c_mv <= 0.0 && c_uv + c_mv <= 0.0
                  && c_um + c_uv + c_mv <= 0.0 && c_um + c_uv + c_mv + 0.5 * ct <= 0.0
                  && c_um + c_uv + ct <= boundary && c_mv + c_uv + ct <= boundary;
        if (ok) {
            Fixation f;
            f.kind = FixationKind::PairOne;
            f.elems = {u, v, -1};
            f.source = Condition::TripleSubgraphJoin;
            return f;
        }
    }
    return std::nullopt;
}

bool check_general_subgraph_join_oracle(const CostFunction& c, const std::vector<int>& s_h,
                                        int i, int j, int oracle_bound)
{
    validate_subset(c.n, s_h);
    const int h = static_cast<int>(s_h.size());
    if (h < 2)
        throw std::invalid_argument("candidate subset needs at least two elements");
    if (h > oracle_bound)
        throw std::invalid_argument("candidate subset exceeds the oracle bound");
    int ipos = -1, jpos = -1;
    for (int a = 0; a < h; ++a) {
        if (s_h[a] == i)
            ipos = a;
        if (s_h[a] == j)
            jpos = a;
    }
    if (ipos < 0 || jpos < 0 || ipos == jpos)
        throw std::invalid_argument("pair must lie inside the candidate subset");

    // reversed-sign local instance whose maximum over partitions must
    // vanish (the all-joined labeling always attains zero)
    CostFunction local(h);
    for (int b = 1; b < h; ++b)
        for (int a = 0; a < b; ++a) {
            double fold = 0.0;
            for (int r = 0; r < h; ++r)
                if (r != a && r != b)
                    fold += 0.5 * c.triple(s_h[a], s_h[b], s_h[r]);
            local.pair(a, b) = -c.pair(s_h[a], s_h[b]) + fold;
        }
    for (int r = 2; r < h; ++r)
        for (int q = 1; q < r; ++q)
            for (int p = 0; p < q; ++p)
                local.triple(p, q, r) = -2.0 * c.triple(s_h[p], s_h[q], s_h[r]);
    for (int r = 2; r < h; ++r)
        for (int q = 1; q < r; ++q)
            for (int p = 0; p < q; ++p)
                local.constant += 0.5 * c.triple(s_h[p], s_h[q], s_h[r]);
    for (int q = 1; q < h; ++q)
        for (int p = 0; p < q; ++p)
            local.constant += c.pair(s_h[p], s_h[q]);

    double max_value = -std::numeric_limits<double>::infinity();
    enumerate_block_assignments(
        h,
        [&](const std::vector<int>& block_of) {
            max_value = std::max(max_value, evaluate_objective(local, block_of));
        },
        oracle_bound);
    if (std::fabs(max_value) > 1e-9)
        return false;

    // negative boundary budget of the candidate subset
    std::vector<char> in_h(c.n, 0);
    for (int v : s_h)
        in_h[v] = 1;
    double budget = 0.0;
    for (int q = 1; q < c.n; ++q)
        for (int p = 0; p < q; ++p)
            if (in_h[p] != in_h[q])
                budget += std::min(c.pair_costs[pair_rank(p, q)], 0.0);
    for (int r = 2; r < c.n; ++r)
        for (int q = 1; q < r; ++q)
            for (int p = 0; p < q; ++p) {
                int inside = in_h[p] + in_h[q] + in_h[r];
                if (inside >= 1 && inside <= 2)
                    budget += std::min(c.triple_costs[triple_rank(p, q, r)], 0.0);
            }

    // every split of the subset separating i from j must cost at most the budget
    for (std::uint32_t mask = 0; mask < (1u << h); ++mask) {
        if (!(mask & (1u << ipos)) || (mask & (1u << jpos)))
            continue;
        double inner = 0.0;
        for (int b = 1; b < h; ++b)
            for (int a = 0; a < b; ++a)
                if (((mask >> a) & 1u) != ((mask >> b) & 1u))
                    inner += c.pair(s_h[a], s_h[b]);
        for (int r = 2; r < h; ++r)
            for (int q = 1; q < r; ++q)
                for (int p = 0; p < q; ++p) {
                    int bits = ((mask >> p) & 1u) + ((mask >> q) & 1u) + ((mask >> r) & 1u);
                    if (bits == 1 || bits == 2)
                        inner += c.triple(s_h[p], s_h[q], s_h[r]);
                }
        if (budget < inner)
            return false;
    }
    return true;
}

std::vector<Fixation> find_subset_join(const CostFunction& c)
{
    const int n = c.n;
    struct Seed
    {
        double cost;
        int rank;
        int p, q;
    };
    std::vector<Seed> seeds;
    for (int q = 1; q < n; ++q)
        for (int p = 0; p < q; ++p) {
            double v = c.pair_costs[pair_rank(p, q)];
            if (v <= 0.0)
                seeds.push_back({v, pair_rank(p, q), p, q});
        }
    std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) {
        if (a.cost != b.cost)
            return a.cost < b.cost;
        return a.rank < b.rank;
    });

    std::set<std::vector<int>> tried;
    for (const Seed& seed : seeds) {
        std::vector<char> in_r(n, 0);
        std::vector<int> members{seed.p, seed.q};
        in_r[seed.p] = in_r[seed.q] = 1;

        // grow while all newly introduced inner costs stay nonpositive,
        // preferring the element with the smallest introduced cost sum
        for (;;) {
            int best = -1;
            double best_delta = std::numeric_limits<double>::infinity();
            for (int v = 0; v < n; ++v) {
                if (in_r[v])
                    continue;
                bool admissible = true;
                double delta = 0.0;
                for (std::size_t a = 0; a < members.size() && admissible; ++a) {
                    double pv = c.pair(v, members[a]);
                    if (pv > 0.0) {
                        admissible = false;
                        break;
                    }
                    delta += pv;
                    for (std::size_t b = a + 1; b < members.size(); ++b) {
                        double tv = c.triple(v, members[a], members[b]);
                        if (tv > 0.0) {
                            admissible = false;
                            break;
                        }
                        delta += tv;
                    }
                }
                if (admissible && delta < best_delta) {
                    best = v;
                    best_delta = delta;
                }
            }
            if (best < 0)
                break;
            in_r[best] = 1;
            members.push_back(best);
        }

        std::vector<int> block = members;
        std::sort(block.begin(), block.end());
        if (block.size() < 2 || !tried.insert(block).second)
            continue;

        const int m = static_cast<int>(block.size());
        // interior pair weights with triples folded in; nonpositive because
        // the growth rule admits only nonpositive inner costs
        PairWeights interior(m);
        for (int b = 1; b < m; ++b)
            for (int a = 0; a < b; ++a) {
                double wv = c.pair(block[a], block[b]);
                for (int r = 0; r < m; ++r)
                    if (r != a && r != b)
                        wv += 0.5 * c.triple(block[a], block[b], block[r]);
                interior.pair(a, b) = -wv;
            }

        double lhs = -global_min_cut(interior).value;

        double rhs = 0.0;
        for (int r = 2; r < n; ++r)
            for (int q = 1; q < r; ++q)
                for (int p = 0; p < q; ++p) {
                    int inside = in_r[p] + in_r[q] + in_r[r];
                    if (inside >= 1 && inside <= 2)
                        rhs += std::min(c.triple_costs[triple_rank(p, q, r)], 0.0);
                }
        for (int q = 1; q < n; ++q)
            for (int p = 0; p < q; ++p)
                if (in_r[p] != in_r[q])
                    rhs += std::min(c.pair_costs[pair_rank(p, q)], 0.0);

        if (lhs <= rhs) {
            std::vector<Fixation> fixes;
            for (int b = 1; b < m; ++b)
                for (int a = 0; a < b; ++a) {
                    Fixation f;
                    f.kind = FixationKind::PairOne;
                    f.elems = {block[a], block[b], -1};
                    f.witness = block;
                    f.source = Condition::SubsetJoin;
                    fixes.push_back(f);
                }
            return fixes;
        }
    }
    return {};
}

} // namespace cubpart
