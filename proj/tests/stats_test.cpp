#include <doctest.h>

#include <stdexcept>

#include "cubpart/stats.hpp"

using cubpart::quantile;

TEST_CASE("median of an even sample averages the two middle order statistics")
{
    std::vector<double> values;
    for (int v = 30; v >= 1; --v)
        values.push_back(v);
    CHECK(quantile(values, 0.5) == 15.5);
    CHECK(quantile(values, 0.25) == 8.25);
    CHECK(quantile(values, 0.75) == 22.75);
}

TEST_CASE("quantiles interpolate linearly between order statistics")
{
    std::vector<double> values{10.0, 20.0, 30.0, 40.0, 50.0};
    CHECK(quantile(values, 0.0) == 10.0);
    CHECK(quantile(values, 0.5) == 30.0);
    CHECK(quantile(values, 1.0) == 50.0);
    CHECK(quantile(values, 0.125) == 15.0);
}

TEST_CASE("quantile of a singleton is that value at every level")
{
    std::vector<double> one{7.5};
    CHECK(quantile(one, 0.25) == 7.5);
    CHECK(quantile(one, 0.5) == 7.5);
    CHECK(quantile(one, 0.75) == 7.5);
}

TEST_CASE("quantile rejects bad input")
{
    CHECK_THROWS_AS(quantile({}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(quantile({1.0}, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(quantile({1.0}, 1.1), std::invalid_argument);
}
