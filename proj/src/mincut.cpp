#include "cubpart/mincut.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace cubpart {

namespace {

constexpr double kResidualEps = 1e-9;

double apply_transform(double v, FoldTransform t)
{
    switch (t) {
    case FoldTransform::Identity: return v;
    case FoldTransform::NegativePart: return negative_part(v);
    case FoldTransform::AbsoluteValue: return std::fabs(v);
    }
    throw std::invalid_argument("unknown fold transform");
}

} // namespace

PairWeights::PairWeights(int n_elements)
    : n(n_elements)
{
    if (n < 1)
        throw std::invalid_argument("pair weights need at least one element");
    w.assign(num_pairs(n), 0.0);
}

PairWeights fold_triples_into_pairs(const CostFunction& c, FoldTransform transform)
{
    PairWeights out(c.n);
    for (int q = 1; q < c.n; ++q)
        for (int p = 0; p < q; ++p)
            out.w[pair_rank(p, q)] = apply_transform(c.pair_costs[pair_rank(p, q)], transform);
    for (int r = 2; r < c.n; ++r)
        for (int q = 1; q < r; ++q)
            for (int p = 0; p < q; ++p) {
                double half = 0.5 * apply_transform(c.triple_costs[triple_rank(p, q, r)], transform);
                out.w[pair_rank(p, q)] += half;
                out.w[pair_rank(p, r)] += half;
                out.w[pair_rank(q, r)] += half;
            }
    return out;
}

double evaluate_qpbo(const QpboInstance& q, const std::vector<std::uint8_t>& y)
{
    const int m = static_cast<int>(q.vars.size());
    if (static_cast<int>(y.size()) != m)
        throw std::invalid_argument("assignment has wrong length");
    double value = q.constant;
    for (int b = 1; b < m; ++b)
        for (int a = 0; a < b; ++a)
            if (y[a] && y[b])
                value += q.quadratic[pair_rank(a, b)];
    for (int a = 0; a < m; ++a)
        if (y[a])
            value += q.linear[a];
    return value;
}

double evaluate_posiform(const QpboInstance& q, const std::vector<std::uint8_t>& y)
{
    const int m = static_cast<int>(q.vars.size());
    if (static_cast<int>(y.size()) != m)
        throw std::invalid_argument("assignment has wrong length");
    double value = q.constant;
    for (int b = 1; b < m; ++b)
        for (int a = 0; a < b; ++a) {
            double c = q.quadratic[pair_rank(a, b)];
            if (y[a] && !y[b])
                value += c;
            if (y[b] && !y[a])
                value += c;
        }
    for (int a = 0; a < m; ++a) {
        if (q.linear[a] > 0.0) {
            if (y[a])
                value += q.linear[a];
        } else if (!y[a]) {
            value -= q.linear[a];
        }
    }
    return value;
}

QpboInstance constrained_cut_to_qpbo(const PairWeights& w, int source,
                                     const std::vector<int>& zero_side)
{
    if (source < 0 || source >= w.n)
        throw std::invalid_argument("source out of range");
    if (zero_side.empty())
        throw std::invalid_argument("zero side must be nonempty");
    std::vector<char> excluded(w.n, 0);
    excluded[source] = 1;
    for (int v : zero_side) {
        if (v < 0 || v >= w.n || v == source)
            throw std::invalid_argument("invalid zero-side element");
        excluded[v] = 1;
    }

    QpboInstance q;
    for (int v = 0; v < w.n; ++v)
        if (!excluded[v])
            q.vars.push_back(v);

    const int m = static_cast<int>(q.vars.size());
    q.linear.assign(m, 0.0);
    q.quadratic.assign(num_pairs(m), 0.0);
    for (int a = 0; a < m; ++a) {
        int p = q.vars[a];
        double row = 0.0;
        for (int v = 0; v < w.n; ++v)
            if (v != p)
                row += w.pair(p, v);
        q.linear[a] = row - 2.0 * w.pair(p, source);
    }
    for (int b = 1; b < m; ++b)
        for (int a = 0; a < b; ++a)
            q.quadratic[pair_rank(a, b)] = -2.0 * w.pair(q.vars[a], q.vars[b]);
    for (int v = 0; v < w.n; ++v)
        if (v != source)
            q.constant += w.pair(v, source);
    return q;
}

QpboInstance qpbo_to_posiform(const QpboInstance& q)
{
    const int m = static_cast<int>(q.vars.size());
    QpboInstance out;
    out.vars = q.vars;
    out.constant = q.constant;
    out.linear.assign(m, 0.0);
    out.quadratic.assign(num_pairs(m), 0.0);
    for (int b = 1; b < m; ++b)
        for (int a = 0; a < b; ++a)
            out.quadratic[pair_rank(a, b)] = -0.5 * q.quadratic[pair_rank(a, b)];
    for (int a = 0; a < m; ++a) {
        double half_row = 0.0;
        for (int b = 0; b < m; ++b)
            if (b != a)
                half_row += 0.5 * q.quadratic[pair_index(a, b)];
        out.linear[a] = q.linear[a] + half_row;
        if (out.linear[a] < 0.0)
            out.constant += out.linear[a];
    }
    return out;
}

FlowNetwork posiform_to_network(const QpboInstance& q)
{
    const int m = static_cast<int>(q.vars.size());
    FlowNetwork net;
    net.node_count = m + 2;
    net.source = m;
    net.sink = m + 1;

    auto add_arc = [&net](int from, int to, double capacity) {
        if (capacity < 0.0)
            throw std::invalid_argument("negative capacity: posiform is not submodular");
        if (capacity > 0.0)
            net.arcs.push_back({from, to, capacity});
    };

    for (int a = 0; a < m; ++a) {
        if (q.linear[a] > 0.0)
            add_arc(a, net.sink, q.linear[a]);
        else if (q.linear[a] < 0.0)
            add_arc(net.source, a, -q.linear[a]);
    }
    for (int b = 1; b < m; ++b)
        for (int a = 0; a < b; ++a) {
            double c = q.quadratic[pair_rank(a, b)];
            if (c != 0.0) {
                add_arc(a, b, c);
                add_arc(b, a, c);
            }
        }
    return net;
}

namespace {

// Residual-arc representation; arc 2k and 2k+1 are mutual reverses.
struct ResidualGraph
{
    std::vector<int> to;
    std::vector<double> residual;
    std::vector<std::vector<int>> out; // arc ids per node

    explicit ResidualGraph(int nodes) : out(nodes) {}

    void add(int from, int to_node, double capacity)
    {
        out[from].push_back(static_cast<int>(to.size()));
        to.push_back(to_node);
        residual.push_back(capacity);
        out[to_node].push_back(static_cast<int>(to.size()));
        to.push_back(from);
        residual.push_back(0.0);
    }
};

} // namespace

StCutResult min_st_cut(const FlowNetwork& net)
{
    const int n = net.node_count;
    if (n < 2 || net.source < 0 || net.source >= n || net.sink < 0 || net.sink >= n
        || net.source == net.sink)
        throw std::invalid_argument("flow network needs distinct source and sink");
    for (const auto& a : net.arcs) {
        if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
            throw std::invalid_argument("arc endpoint out of range");
        if (!(a.capacity >= 0.0) || !std::isfinite(a.capacity))
            throw std::invalid_argument("arc capacity must be finite and nonnegative");
    }

    ResidualGraph g(n);
    for (const auto& a : net.arcs)
        if (a.from != a.to && a.capacity > 0.0)
            g.add(a.from, a.to, a.capacity);

    const int s = net.source;
    const int t = net.sink;
    std::vector<int> height(n, 0);
    std::vector<double> excess(n, 0.0);
    std::vector<std::size_t> cursor(n, 0);
    std::vector<std::vector<int>> bucket(2 * n + 1);
    int highest = 0;

    auto activate = [&](int v) {
        if (v != s && v != t && excess[v] > 0.0) {
            bucket[height[v]].push_back(v);
            highest = std::max(highest, height[v]);
        }
    };

    height[s] = n;
    for (int e : g.out[s]) {
        if ((e & 1) == 0 && g.residual[e] > 0.0) {
            double d = g.residual[e];
            g.residual[e] = 0.0;
            g.residual[e ^ 1] += d;
            excess[g.to[e]] += d;
            excess[s] -= d;
        }
    }
    for (int v = 0; v < n; ++v)
        activate(v);

    while (highest >= 0) {
        if (bucket[highest].empty()) {
            --highest;
            continue;
        }
        int u = bucket[highest].back();
        bucket[highest].pop_back();
        if (u == s || u == t || excess[u] <= 0.0 || height[u] != highest)
            continue;

        while (excess[u] > 0.0) {
            if (cursor[u] == g.out[u].size()) {
                // relabel
                int min_h = 2 * n;
                for (int e : g.out[u])
                    if (g.residual[e] > 0.0)
                        min_h = std::min(min_h, height[g.to[e]]);
                cursor[u] = 0;
                if (min_h >= 2 * n)
                    break; // no residual arc left; excess is stranded
                height[u] = min_h + 1;
                if (height[u] > 2 * n)
                    break;
            } else {
                int e = g.out[u][cursor[u]];
                int v = g.to[e];
                if (g.residual[e] > 0.0 && height[u] == height[v] + 1) {
                    double d = std::min(excess[u], g.residual[e]);
                    g.residual[e] -= d;
                    g.residual[e ^ 1] += d;
                    excess[u] -= d;
                    bool was_inactive = excess[v] == 0.0;
                    excess[v] += d;
                    if (was_inactive)
                        activate(v);
                } else {
                    ++cursor[u];
                }
            }
        }
    }

    // Source-reachable set in the residual network; residuals at or below
    // the tolerance count as saturated.
    std::vector<char> reach(n, 0);
    std::queue<int> bfs;
    reach[s] = 1;
    bfs.push(s);
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int e : g.out[u]) {
            int v = g.to[e];
            if (!reach[v] && g.residual[e] > kResidualEps) {
                reach[v] = 1;
                bfs.push(v);
            }
        }
    }
    if (reach[t])
        throw std::runtime_error("max flow did not converge");

    StCutResult result;
    result.flow_value = excess[t];
    for (const auto& a : net.arcs)
        if (a.from != a.to && reach[a.from] && !reach[a.to])
            result.value += a.capacity;
    for (int v = 0; v < n; ++v)
        if (reach[v])
            result.source_side.push_back(v);
    return result;
}

GlobalCutResult global_min_cut(const PairWeights& w)
{
    if (w.n < 2)
        throw std::invalid_argument("global min cut needs at least two elements");
    for (double v : w.w)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("global min cut needs nonnegative finite weights");

    const int n = w.n;
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (int q = 1; q < n; ++q)
        for (int p = 0; p < q; ++p)
            a[p][q] = a[q][p] = w.w[pair_rank(p, q)];

    std::vector<char> merged(n, 0);
    std::vector<std::vector<int>> members(n);
    for (int v = 0; v < n; ++v)
        members[v] = {v};

    double best_value = 0.0;
    std::vector<int> best_side;
    bool have_best = false;

    for (int phase = 0; phase < n - 1; ++phase) {
        // maximum adjacency search; ties go to the smallest id
        std::vector<char> added(n, 0);
        std::vector<double> conn(n, 0.0);
        int prev = -1, last = -1;
        double last_conn = 0.0;
        int remaining = n - phase;
        for (int step = 0; step < remaining; ++step) {
            int pick = -1;
            for (int v = 0; v < n; ++v)
                if (!merged[v] && !added[v] && (pick < 0 || conn[v] > conn[pick]))
                    pick = v;
            added[pick] = 1;
            prev = last;
            last = pick;
            last_conn = conn[pick];
            for (int v = 0; v < n; ++v)
                if (!merged[v] && !added[v])
                    conn[v] += a[pick][v];
        }
        if (!have_best || last_conn < best_value) {
            have_best = true;
            best_value = last_conn;
            best_side = members[last];
        }
        // merge last into prev
        merged[last] = 1;
        members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
        for (int v = 0; v < n; ++v)
            if (!merged[v] && v != prev) {
                a[prev][v] += a[last][v];
                a[v][prev] = a[prev][v];
            }
    }

    std::sort(best_side.begin(), best_side.end());
    std::vector<char> in_side(n, 0);
    for (int v : best_side)
        in_side[v] = 1;
    if (!in_side[0]) {
        std::vector<int> complement;
        for (int v = 0; v < n; ++v)
            if (!in_side[v])
                complement.push_back(v);
        best_side = std::move(complement);
        for (int v = 0; v < n; ++v)
            in_side[v] ^= 1;
    }

    GlobalCutResult result;
    result.one_side = std::move(best_side);
    for (int q = 1; q < n; ++q)
        for (int p = 0; p < q; ++p)
            if (in_side[p] != in_side[q])
                result.value += w.w[pair_rank(p, q)];
    return result;
}

WitnessCut min_constrained_cut(const PairWeights& w, int source,
                               const std::vector<int>& zero_side)
{
    for (double v : w.w)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("witness search needs nonnegative finite weights");

    QpboInstance q = constrained_cut_to_qpbo(w, source, zero_side);

    WitnessCut result;
    result.subset = {source};
    if (!q.vars.empty()) {
        StCutResult cut = min_st_cut(posiform_to_network(qpbo_to_posiform(q)));
        std::vector<char> on_source_side(q.vars.size() + 2, 0);
        for (int v : cut.source_side)
            on_source_side[v] = 1;
        for (int a = 0; a < static_cast<int>(q.vars.size()); ++a)
            if (on_source_side[a])
                result.subset.push_back(q.vars[a]);
        std::sort(result.subset.begin(), result.subset.end());
    }

    std::vector<char> in_subset(w.n, 0);
    for (int v : result.subset)
        in_subset[v] = 1;
    for (int b = 1; b < w.n; ++b)
        for (int a = 0; a < b; ++a)
            if (in_subset[a] != in_subset[b])
                result.value += w.w[pair_rank(a, b)];
    return result;
}

} // namespace cubpart
