#include "wsat/grid.hpp"

#include <algorithm>

namespace wsat {

namespace {

std::vector<ParamVec> all_vectors(int d, int lo, int hi) {
    std::vector<ParamVec> out;
    ParamVec v(static_cast<std::size_t>(d), lo);
    while (true) {
        out.push_back(v);
        int i = 0;
        while (i < d && v[static_cast<std::size_t>(i)] == hi) v[static_cast<std::size_t>(i++)] = lo;
        if (i == d) break;
        ++v[static_cast<std::size_t>(i)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

// non-empty sorted subsets of `pool` with at most max_size members
std::vector<std::vector<ParamVec>> all_families(const std::vector<ParamVec>& pool,
                                                int max_size) {
    std::vector<std::vector<ParamVec>> out;
    std::vector<int> idx;
    auto rec = [&](auto&& self, int from) -> void {
        if (!idx.empty()) {
            std::vector<ParamVec> fam;
            for (int i : idx) fam.push_back(pool[static_cast<std::size_t>(i)]);
            out.push_back(std::move(fam));
        }
        if (static_cast<int>(idx.size()) == max_size) return;
        for (int i = from; i < static_cast<int>(pool.size()); ++i) {
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

bool dominates(const std::vector<ParamVec>& R, const std::vector<ParamVec>& S) {
    for (const auto& s : S)
        for (const auto& r : R)
            if (!leq(s, r)) return false;
    return true;
}

} // namespace

std::vector<GridPoint> enumerate_grid(const GridSpec& spec) {
    std::vector<GridPoint> out;
    for (int d : spec.dims) {
        const auto vec_pool = all_vectors(d, 0, spec.entry_max);
        const auto families = all_families(vec_pool, spec.family_max);
        const auto hosts = all_vectors(d, spec.n_min, spec.n_max);
        for (const auto& n : hosts)
            for (const auto& S : families) {
                bool s_fits = true;
                for (const auto& s : S)
                    if (!leq(s, n)) {
                        s_fits = false;
                        break;
                    }
                if (!s_fits) continue;
                for (const auto& R : families) {
                    if (!dominates(R, S)) continue;
                    out.push_back(GridPoint{n, S, R});
                }
            }
    }
    return out;
}

} // namespace wsat
