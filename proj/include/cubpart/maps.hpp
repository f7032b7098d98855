#pragma once

#include <functional>
#include <vector>

#include "cubpart/core.hpp"

namespace cubpart {

/// Throws unless r is a strictly increasing list of element ids below n.
void validate_subset(int n, const std::vector<int>& r);

/// Sets to 0 every pair variable with exactly one endpoint in r.
/// Idempotent; the result is always feasible.
Labeling apply_cut_map(const Labeling& x, const std::vector<int>& r);

/// Merges into one cluster all clusters of x that intersect r (including
/// the elements of r themselves); everything else is unchanged.
Labeling apply_join_map(const Labeling& x, const std::vector<int>& r);

/// Exhaustively checks that the map never increases the objective.
bool is_improving(const CostFunction& c,
                  const std::function<Labeling(const Labeling&)>& map,
                  int oracle_bound = kDefaultOracleBound);

} // namespace cubpart
