#include "cubpart/engine.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace cubpart {

namespace {

std::pair<int, int> ordered(int a, int b)
{
    return a < b ? std::pair{a, b} : std::pair{b, a};
}

std::array<int, 3> ordered3(int a, int b, int c)
{
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

} // namespace

FixationState::FixationState(int n_elements)
    : n_(n_elements), parent_(n_elements), rank_(n_elements, 0)
{
    if (n_ < 1)
        throw std::invalid_argument("fixation state needs at least one element");
    std::iota(parent_.begin(), parent_.end(), 0);
}

int FixationState::find(int v) const
{
    if (v < 0 || v >= n_)
        throw std::invalid_argument("element out of range");
    while (parent_[v] != v) {
        parent_[v] = parent_[parent_[v]];
        v = parent_[v];
    }
    return v;
}

void FixationState::refresh_lifted() const
{
    if (lifted_fresh_)
        return;
    lifted_cuts_.clear();
    for (auto [a, b] : cut_pairs_)
        lifted_cuts_.insert(ordered(find(a), find(b)));
    lifted_zeros_.clear();
    for (auto& t : zero_triples_)
        lifted_zeros_.insert(ordered3(find(t[0]), find(t[1]), find(t[2])));
    lifted_fresh_ = true;
}

void FixationState::merge(int a, int b)
{
    int ra = find(a), rb = find(b);
    if (ra == rb)
        return;
    refresh_lifted();
    if (lifted_cuts_.count(ordered(ra, rb)))
        throw std::runtime_error("cannot merge a pair fixed to 0");
    for (auto& t : lifted_zeros_) {
        bool collapses = true;
        for (int v : t)
            if (v != ra && v != rb)
                collapses = false;
        if (collapses)
            throw std::runtime_error("merge would join all elements of a zero triple");
    }
    if (rank_[ra] < rank_[rb])
        std::swap(ra, rb);
    parent_[rb] = ra;
    if (rank_[ra] == rank_[rb])
        ++rank_[ra];
    lifted_fresh_ = false;
}

void FixationState::add_cut(int a, int b)
{
    if (same_class(a, b))
        throw std::runtime_error("cannot cut a pair fixed to 1");
    refresh_lifted();
    if (lifted_cuts_.insert(ordered(find(a), find(b))).second)
        cut_pairs_.push_back(ordered(a, b));
}

void FixationState::apply(const Fixation& f)
{
    switch (f.kind) {
    case FixationKind::PairZero:
        add_cut(f.elems[0], f.elems[1]);
        break;
    case FixationKind::PairOne:
        merge(f.elems[0], f.elems[1]);
        break;
    case FixationKind::TripleZero: {
        auto t = ordered3(f.elems[0], f.elems[1], f.elems[2]);
        if (same_class(t[0], t[1]) && same_class(t[0], t[2]))
            throw std::runtime_error("zero triple already merged into one class");
        refresh_lifted();
        if (lifted_zeros_.insert(ordered3(find(t[0]), find(t[1]), find(t[2]))).second)
            zero_triples_.push_back(t);
        break;
    }
    case FixationKind::TripleOne:
        merge(f.elems[0], f.elems[1]);
        merge(f.elems[0], f.elems[2]);
        break;
    case FixationKind::BlockCut: {
        std::vector<char> inside(n_, 0);
        for (int v : f.block) {
            if (v < 0 || v >= n_)
                throw std::invalid_argument("block element out of range");
            inside[v] = 1;
        }
        for (int v : f.block)
            for (int u = 0; u < n_; ++u)
                if (!inside[u])
                    add_cut(v, u);
        break;
    }
    }
    log_.push_back(f);
}

void FixationState::apply_block_cut(const std::vector<int>& block, const std::vector<int>& rest,
                                    Condition source)
{
    for (int v : block)
        for (int u : rest)
            add_cut(v, u);
    Fixation f;
    f.kind = FixationKind::BlockCut;
    f.block = block;
    f.source = source;
    log_.push_back(f);
}

bool FixationState::pair_fixed_zero(int p, int q) const
{
    refresh_lifted();
    int rp = find(p), rq = find(q);
    if (rp == rq)
        return false;
    return lifted_cuts_.count(ordered(rp, rq)) > 0;
}

bool FixationState::triple_fixed(int p, int q, int r) const
{
    int rp = find(p), rq = find(q), rr = find(r);
    if (rp == rq && rp == rr)
        return true;
    refresh_lifted();
    if (rp != rq && lifted_cuts_.count(ordered(rp, rq)))
        return true;
    if (rp != rr && lifted_cuts_.count(ordered(rp, rr)))
        return true;
    if (rq != rr && lifted_cuts_.count(ordered(rq, rr)))
        return true;
    if (rp != rq && rp != rr && rq != rr)
        return lifted_zeros_.count(ordered3(rp, rq, rr)) > 0;
    return false;
}

long long FixationState::count_fixed_pairs() const
{
    long long count = 0;
    for (int q = 1; q < n_; ++q)
        for (int p = 0; p < q; ++p)
            if (pair_fixed(p, q))
                ++count;
    return count;
}

long long FixationState::count_fixed_triples() const
{
    long long count = 0;
    for (int r = 2; r < n_; ++r)
        for (int q = 1; q < r; ++q)
            for (int p = 0; p < q; ++p)
                if (triple_fixed(p, q, r))
                    ++count;
    return count;
}

void apply_cut_fixations(FixationState& state, const std::vector<Fixation>& fixes)
{
    for (const Fixation& f : fixes) {
        if (f.kind == FixationKind::PairOne || f.kind == FixationKind::TripleOne)
            throw std::invalid_argument("joint insertion accepts cut facts only");
        state.apply(f);
    }
}

ReducedInstance make_root_instance(const CostFunction& c)
{
    c.validate();
    ReducedInstance inst;
    inst.costs = c;
    inst.origin.resize(c.n);
    std::iota(inst.origin.begin(), inst.origin.end(), 0);
    return inst;
}

ReducedInstance contract_pair(const ReducedInstance& inst, int i, int j,
                              FixationState& state, Condition source)
{
    const int m = inst.costs.n;
    if (i < 0 || i >= m || j < 0 || j >= m || i == j)
        throw std::invalid_argument("contraction needs two distinct current elements");
    // Record the merge unless an earlier fixation already covers it; a
    // conflicting pair-zero fact makes this throw.
    if (!state.same_class(inst.origin[i], inst.origin[j]))
        state.apply(Fixation{FixationKind::PairOne,
                             {std::min(inst.origin[i], inst.origin[j]),
                              std::max(inst.origin[i], inst.origin[j]), -1},
                             {},
                             {},
                             source});

    // old element id of the new element e after removing j
    auto old_id = [&](int e) { return e < j ? e : e + 1; };

    ReducedInstance out;
    out.costs = CostFunction(m - 1);
    out.costs.constant = inst.costs.constant + inst.costs.pair(i, j);
    out.origin.reserve(m - 1);
    for (int e = 0; e < m - 1; ++e)
        out.origin.push_back(inst.origin[old_id(e)]);

    const int i_new = i < j ? i : i - 1;
    for (int b = 1; b < m - 1; ++b)
        for (int a = 0; a < b; ++a) {
            int oa = old_id(a), ob = old_id(b);
            double v = inst.costs.pair(oa, ob);
            if (a == i_new || b == i_new)
                v += inst.costs.pair(a == i_new ? ob : oa, j)
                     + inst.costs.triple(oa, ob, j);
            out.costs.pair(a, b) = v;
        }
    for (int r = 2; r < m - 1; ++r)
        for (int q = 1; q < r; ++q)
            for (int p = 0; p < q; ++p) {
                int op = old_id(p), oq = old_id(q), orr = old_id(r);
                double v = inst.costs.triple(op, oq, orr);
                if (p == i_new || q == i_new || r == i_new) {
                    int x = p == i_new ? oq : op;
                    int y = r == i_new ? oq : orr;
                    v += inst.costs.triple(x, y, j);
                }
                out.costs.triple(p, q, r) = v;
            }
    return out;
}

std::vector<ReducedInstance> decompose(const ReducedInstance& inst, const Partition& parts,
                                       FixationState& state)
{
    const int m = inst.costs.n;
    if (parts.n != m)
        throw std::invalid_argument("partition size does not match instance");
    parts.validate();
    if (parts.blocks.size() == 1)
        return {inst};

    // record boundary zeros between every pair of blocks, in block order
    for (std::size_t b1 = 0; b1 < parts.blocks.size(); ++b1) {
        std::vector<int> rest_origin;
        for (std::size_t b2 = 0; b2 < parts.blocks.size(); ++b2)
            if (b2 != b1)
                for (int v : parts.blocks[b2])
                    rest_origin.push_back(inst.origin[v]);
        std::vector<int> block_origin;
        for (int v : parts.blocks[b1])
            block_origin.push_back(inst.origin[v]);
        state.apply_block_cut(block_origin, rest_origin, Condition::SubsetSeparation);
    }

    std::vector<ReducedInstance> children;
    for (const auto& block : parts.blocks) {
        ReducedInstance child;
        child.costs = CostFunction(static_cast<int>(block.size()));
        for (int v : block)
            child.origin.push_back(inst.origin[v]);
        const int bsize = static_cast<int>(block.size());
        for (int b = 1; b < bsize; ++b)
            for (int a = 0; a < b; ++a)
                child.costs.pair(a, b) = inst.costs.pair(block[a], block[b]);
        for (int r = 2; r < bsize; ++r)
            for (int q = 1; q < r; ++q)
                for (int p = 0; p < q; ++p)
                    child.costs.triple(p, q, r) =
                        inst.costs.triple(block[p], block[q], block[r]);
        children.push_back(std::move(child));
    }
    return children;
}

namespace {

Fixation to_original_ids(const Fixation& f, const std::vector<int>& origin)
{
    Fixation out = f;
    for (int e = 0; e < 3; ++e)
        if (out.elems[e] >= 0)
            out.elems[e] = origin[out.elems[e]];
    std::sort(out.elems.begin(),
              out.elems.begin() + (out.kind == FixationKind::TripleZero
                                           || out.kind == FixationKind::TripleOne
                                       ? 3
                                       : 2));
    for (int& v : out.block)
        v = origin[v];
    std::sort(out.block.begin(), out.block.end());
    for (int& v : out.witness)
        v = origin[v];
    std::sort(out.witness.begin(), out.witness.end());
    return out;
}

struct JoinHit
{
    std::vector<Fixation> fixes; // original ids, for the state and log
    std::vector<int> current;    // current elements to contract into one
};

JoinHit single_hit(const Fixation& f, const std::vector<int>& origin,
                   std::vector<int> current)
{
    return JoinHit{{to_original_ids(f, origin)}, std::move(current)};
}

std::optional<JoinHit> try_joins(const ReducedInstance& inst, const PreprocessConfig& cfg,
                                 std::set<Condition>& skipped)
{
    const CostFunction& c = inst.costs;
    const int m = c.n;
    if (m < 2)
        return std::nullopt;

    PairWeights neg_fold;
    PairWeights abs_fold;
    bool have_neg = false, have_abs = false;
    auto neg_w = [&]() -> const PairWeights& {
        if (!have_neg) {
            neg_fold = fold_triples_into_pairs(c, FoldTransform::NegativePart);
            have_neg = true;
        }
        return neg_fold;
    };
    auto abs_w = [&]() -> const PairWeights& {
        if (!have_abs) {
            abs_fold = fold_triples_into_pairs(c, FoldTransform::AbsoluteValue);
            have_abs = true;
        }
        return abs_fold;
    };

    for (Condition cond : cfg.join_order) {
        if (!cfg.enabled.count(cond))
            continue;
        bool expensive = cond == Condition::TripletJoin || cond == Condition::TriangleEdgeJoin;
        if (expensive && cfg.expensive_size_limit >= 0 && m > cfg.expensive_size_limit) {
            skipped.insert(cond);
            continue;
        }
        switch (cond) {
        case Condition::SubsetJoin: {
            std::vector<Fixation> fixes = find_subset_join(c);
            if (!fixes.empty()) {
                JoinHit hit;
                hit.current = fixes.front().witness;
                for (const Fixation& f : fixes)
                    hit.fixes.push_back(to_original_ids(f, inst.origin));
                return hit;
            }
            break;
        }
        case Condition::EdgeJoin:
            for (int q = 1; q < m; ++q)
                for (int p = 0; p < q; ++p)
                    if (auto f = find_edge_join(c, abs_w(), p, q))
                        return single_hit(*f, inst.origin, {p, q});
            break;
        case Condition::TriangleEdgeJoin:
            for (int r = 2; r < m; ++r)
                for (int q = 1; q < r; ++q)
                    for (int p = 0; p < q; ++p)
                        if (auto f = find_triangle_edge_join(c, abs_w(), p, q, r))
                            return single_hit(*f, inst.origin, {f->elems[0], f->elems[1]});
            break;
        case Condition::PairSubgraphJoin:
            for (int q = 1; q < m; ++q)
                for (int p = 0; p < q; ++p)
                    if (auto f = check_pair_subgraph_join(c, p, q))
                        return single_hit(*f, inst.origin, {p, q});
            break;
        case Condition::TripleSubgraphJoin:
            for (int r = 2; r < m; ++r)
                for (int q = 1; q < r; ++q)
                    for (int p = 0; p < q; ++p)
                        if (auto f = check_triple_subgraph_join(c, p, q, r))
                            return single_hit(*f, inst.origin, {f->elems[0], f->elems[1]});
            break;
        case Condition::TripletJoin: {
            PositiveCostSums pos = positive_cost_sums(c);
            for (int r = 2; r < m; ++r)
                for (int q = 1; q < r; ++q)
                    for (int p = 0; p < q; ++p)
                        if (auto f = find_triplet_join(c, neg_w(), pos, p, q, r))
                            return single_hit(*f, inst.origin, {p, q, r});
            break;
        }
        default:
            break;
        }
    }
    return std::nullopt;
}

} // namespace

PreprocessResult preprocess(const CostFunction& c, const PreprocessConfig& cfg)
{
    auto started = std::chrono::steady_clock::now();
    c.validate();

    PreprocessResult result{FixationState(c.n), {}, 0.0, {}};
    std::set<Condition> skipped;

    std::vector<ReducedInstance> stack;
    stack.push_back(make_root_instance(c));

    while (!stack.empty()) {
        ReducedInstance inst = std::move(stack.back());
        stack.pop_back();
        bool handed_off = false;

        for (;;) {
            const int m = inst.costs.n;
            if (m < 2)
                break;

            if (cfg.enabled.count(Condition::SubsetSeparation)) {
                Partition parts = region_growing(inst.costs);
                if (parts.blocks.size() > 1) {
                    result.constant_shift += inst.costs.constant;
                    inst.costs.constant = 0.0;
                    auto children = decompose(inst, parts, result.state);
                    for (auto it = children.rbegin(); it != children.rend(); ++it)
                        stack.push_back(std::move(*it));
                    handed_off = true;
                    break;
                }
            }

            if (auto hit = try_joins(inst, cfg, skipped)) {
                for (const Fixation& f : hit->fixes)
                    result.state.apply(f);
                std::vector<int> group = hit->current;
                std::sort(group.begin(), group.end());
                Condition source = hit->fixes.front().source;
                for (std::size_t g = group.size(); g-- > 1;)
                    inst = contract_pair(inst, group[0], group[g], result.state, source);
                continue;
            }

            if (cfg.enabled.count(Condition::EdgeCut)) {
                PairWeights neg_fold = fold_triples_into_pairs(inst.costs,
                                                               FoldTransform::NegativePart);
                for (int q = 1; q < m; ++q)
                    for (int p = 0; p < q; ++p)
                        if (auto f = find_edge_cut(inst.costs, neg_fold, p, q))
                            result.state.apply(to_original_ids(*f, inst.origin));
            }
            if (cfg.enabled.count(Condition::TripletCut) && m >= 3) {
                PairWeights neg_fold = fold_triples_into_pairs(inst.costs,
                                                               FoldTransform::NegativePart);
                for (int r = 2; r < m; ++r)
                    for (int q = 1; q < r; ++q)
                        for (int p = 0; p < q; ++p)
                            if (auto f = find_triplet_cut(inst.costs, neg_fold, p, q, r))
                                result.state.apply(to_original_ids(*f, inst.origin));
            }
            break;
        }

        if (!handed_off)
            result.leaves.push_back(std::move(inst));
    }

    RunReport& report = result.report;
    report.n = c.n;
    long long pair_total = num_pairs(c.n);
    long long triple_total = num_triples(c.n);
    report.pairs_fixed_pct =
        pair_total == 0 ? 100.0
                        : 100.0 * static_cast<double>(result.state.count_fixed_pairs())
                              / static_cast<double>(pair_total);
    report.triples_fixed_pct =
        triple_total == 0 ? 100.0
                          : 100.0 * static_cast<double>(result.state.count_fixed_triples())
                                / static_cast<double>(triple_total);
    for (const Fixation& f : result.state.log())
        ++report.per_condition[std::string(condition_name(f.source))];
    for (Condition cond : skipped)
        report.disabled.push_back(std::string(condition_name(cond)));
    std::sort(report.disabled.begin(), report.disabled.end());

    auto finished = std::chrono::steady_clock::now();
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(finished - started).count();
    return result;
}

} // namespace cubpart
