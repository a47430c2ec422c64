#pragma once

// Rank-correlation helpers for the statistical acceptance checks. Average
// ranks handle ties; significance comes from a seeded permutation test, so no
// distributional lookup tables are needed.

#include <algorithm>
#include <cmath>
#include <vector>

#include "wmn/rng.hpp"

namespace stats {

inline std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

inline double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    const auto n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

inline double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
    return pearson(average_ranks(xs), average_ranks(ys));
}

// One-sided permutation p-value for the hypothesis "spearman(xs, ys) is
// negative": the fraction of label permutations at least as negative as the
// observed correlation.
inline double permutation_p_negative(const std::vector<double>& xs, const std::vector<double>& ys,
                                     int permutations, std::uint64_t seed) {
    const double observed = spearman(xs, ys);
    std::vector<double> shuffled = ys;
    wmn::Rng rng(seed);
    int at_least_as_extreme = 0;
    for (int i = 0; i < permutations; ++i) {
        rng.shuffle(shuffled);
        if (spearman(xs, shuffled) <= observed) ++at_least_as_extreme;
    }
    return (static_cast<double>(at_least_as_extreme) + 1.0) /
           (static_cast<double>(permutations) + 1.0);
}

} // namespace stats
