#pragma once

#include <vector>

#include "wsat/params.hpp"

namespace wsat {

/// Desk-scale parameter grid: dimensions, host sizes n in [n_min, n_max]^d,
/// and families S, R of distinct vectors with entries in [0, entry_max] and
/// at most family_max members, subject to the validity constraints
/// n_i >= s_i and r_i >= s_i for every pair.
struct GridSpec {
    std::vector<int> dims{1, 2};
    int n_min = 1;
    int n_max = 5;
    int entry_max = 3;
    int family_max = 2;
};

struct GridPoint {
    ParamVec n;
    std::vector<ParamVec> S;
    std::vector<ParamVec> R;
};

/// Deterministic enumeration: d ascending, then n, S, R lexicographic.
std::vector<GridPoint> enumerate_grid(const GridSpec& spec);

} // namespace wsat
