#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cubpart {

/// Inclusive (linear interpolation between order statistics) quantile;
/// the median of an even-sized sample is the mean of the two middle
/// values.
inline double quantile(std::vector<double> values, double q)
{
    if (values.empty())
        throw std::invalid_argument("quantile of an empty sample");
    if (q < 0.0 || q > 1.0)
        throw std::invalid_argument("quantile level must lie in [0, 1]");
    std::sort(values.begin(), values.end());
    double pos = q * static_cast<double>(values.size() - 1);
    auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= values.size())
        return values.back();
    double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

} // namespace cubpart
