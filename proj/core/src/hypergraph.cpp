#include "wsat/hypergraph.hpp"

#include <algorithm>

namespace wsat {

VertexUniverse::VertexUniverse(ParamVec n) : sizes(std::move(n)) {
    check_param_vec(sizes, -1, "n");
    offsets.resize(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        offsets[i] = total;
        total += sizes[i];
    }
    if (total > Mask::kCapacity)
        throw InvalidInput("universe needs " + std::to_string(total) +
                           " vertices but mask capacity is " + std::to_string(Mask::kCapacity) +
                           " (rebuild with a larger WSAT_MASK_WORDS)");
}

std::pair<int, int> VertexUniverse::vertex(int pos) const {
    for (int i = dim() - 1; i >= 0; --i)
        if (pos >= offsets[static_cast<std::size_t>(i)])
            return {i, pos - offsets[static_cast<std::size_t>(i)]};
    throw InvalidInput("bit position outside universe");
}

ParamVec VertexUniverse::profile(const Mask& e) const {
    ParamVec p(sizes.size(), 0);
    for (std::size_t i = 0; i < sizes.size(); ++i)
        p[i] = (e & class_mask(static_cast<int>(i))).count();
    return p;
}

bool edge_set_contains(const EdgeSet& sorted, const Mask& e) {
    return std::binary_search(sorted.begin(), sorted.end(), e);
}

void sort_edge_set(EdgeSet& edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

int ColoredHypergraph::index_of(const Mask& e) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges.begin());
}

ColoredHypergraph build_host(const ParamVec& n, const std::vector<ParamVec>& S) {
    check_param_vec(n, -1, "n");
    auto fam = canonical_family(S, "S");
    const int d = static_cast<int>(n.size());
    VertexUniverse u(n);
    std::vector<Mask> pools;
    pools.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) pools.push_back(u.class_mask(i));

    EdgeSet edges;
    for (const auto& s : fam) {
        check_param_vec(s, d, "S");
        if (!leq(s, n)) throw InvalidInput("profile violates n_i >= s_i");
        for_each_color_subsets(pools, s, [&](const std::vector<Mask>& chosen) {
            Mask e;
            for (const auto& part : chosen) e = e | part;
            edges.push_back(e);
            return false;
        });
    }
    // distinct profiles yield disjoint edge sets, so sorting suffices
    std::sort(edges.begin(), edges.end());
    return ColoredHypergraph{std::move(u), std::move(edges)};
}

ParamVec edge_profile(const Mask& e, const VertexUniverse& u) {
    if (!e.subset_of(u.full_mask())) throw InvalidInput("edge has bits outside the universe");
    return u.profile(e);
}

ParamVec PartsChoice::part_sizes() const {
    ParamVec sizes;
    sizes.reserve(parts.size());
    for (const auto& p : parts) sizes.push_back(p.count());
    return sizes;
}

Mask PartsChoice::union_mask() const {
    Mask m;
    for (const auto& p : parts) m = m | p;
    return m;
}

PartsChoice parts_from_indices(const VertexUniverse& u,
                               const std::vector<std::vector<int>>& lists) {
    if (static_cast<int>(lists.size()) != u.dim())
        throw InvalidInput("parts list count must match the dimension");
    PartsChoice choice;
    choice.parts.resize(lists.size());
    for (std::size_t i = 0; i < lists.size(); ++i) {
        for (int a : lists[i]) {
            if (a < 0 || a >= u.sizes[i]) throw InvalidInput("part index out of range");
            choice.parts[i].set(u.bit(static_cast<int>(i), a));
        }
    }
    return choice;
}

EdgeSet copy_edges(const PartsChoice& parts, const std::vector<ParamVec>& S,
                   const VertexUniverse& u) {
    if (static_cast<int>(parts.parts.size()) != u.dim())
        throw InvalidInput("parts choice does not match the universe dimension");
    for (int i = 0; i < u.dim(); ++i)
        if (!parts.parts[static_cast<std::size_t>(i)].subset_of(u.class_mask(i)))
            throw InvalidInput("part index out of range");

    EdgeSet out;
    for (const auto& s : S) {
        check_param_vec(s, u.dim(), "S");
        bool fits = true;
        for (int i = 0; i < u.dim(); ++i)
            if (parts.parts[static_cast<std::size_t>(i)].count() < s[static_cast<std::size_t>(i)]) {
                fits = false;
                break;
            }
        if (!fits) continue;
        for_each_color_subsets(parts.parts, s, [&](const std::vector<Mask>& chosen) {
            Mask e;
            for (const auto& part : chosen) e = e | part;
            out.push_back(e);
            return false;
        });
    }
    sort_edge_set(out);
    return out;
}

bool is_copy_complete(const PartsChoice& parts, const std::vector<ParamVec>& S,
                      const VertexUniverse& u, const EdgeSet& current) {
    for (const Mask& e : copy_edges(parts, S, u))
        if (!edge_set_contains(current, e)) return false;
    return true;
}

} // namespace wsat
