#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>

namespace cubpart {

// Unordered pairs and triples of {0, ..., n-1} are stored in dense arrays
// under the colexicographic rank of the sorted tuple.  The rank does not
// depend on n, so the same index functions serve every ground set size.
//
// Canonical scan order throughout the project is ascending rank, i.e.
//   pairs:   for q in [1,n) for p in [0,q)
//   triples: for r in [2,n) for q in [1,r) for p in [0,q)

inline int num_pairs(int n) { return n * (n - 1) / 2; }

inline int num_triples(int n) { return n * (n - 1) * (n - 2) / 6; }

/// Rank of the pair {p,q} with p < q.
inline int pair_rank(int p, int q) { return q * (q - 1) / 2 + p; }

/// Rank of the triple {p,q,r} with p < q < r.
inline int triple_rank(int p, int q, int r)
{
    return r * (r - 1) * (r - 2) / 6 + q * (q - 1) / 2 + p;
}

/// Rank of an unordered pair given in any order.
inline int pair_index(int a, int b)
{
    if (a > b)
        std::swap(a, b);
    return pair_rank(a, b);
}

/// Rank of an unordered triple given in any order.
inline int triple_index(int a, int b, int c)
{
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return triple_rank(a, b, c);
}

inline double positive_part(double r) { return r > 0.0 ? r : 0.0; }

inline double negative_part(double r) { return r < 0.0 ? -r : 0.0; }

} // namespace cubpart
