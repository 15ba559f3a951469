#pragma once

#include <vector>

#include "wsat/mask.hpp"
#include "wsat/params.hpp"

namespace wsat {

/// Color-contiguous vertex order: vertex (a, i) — index a within color class
/// i — sits at bit offset_i + a, and (a, i) precedes (b, j) iff i < j, or
/// i = j and a < b. All indices are 0-based in the C++ API; the JSON layer
/// speaks 1-based (a, i) pairs.
struct VertexUniverse {
    ParamVec sizes;
    std::vector<int> offsets;
    int total = 0;

    explicit VertexUniverse(ParamVec n);

    int dim() const { return static_cast<int>(sizes.size()); }
    int bit(int color, int index) const { return offsets[static_cast<std::size_t>(color)] + index; }
    /// Inverse of bit(): (color, index) for a bit position.
    std::pair<int, int> vertex(int pos) const;
    Mask class_mask(int color) const {
        return Mask::range(offsets[static_cast<std::size_t>(color)],
                           sizes[static_cast<std::size_t>(color)]);
    }
    Mask full_mask() const { return Mask::range(0, total); }

    /// Per-color intersection sizes (|e ∩ N_i|)_i.
    ParamVec profile(const Mask& e) const;

    bool operator==(const VertexUniverse&) const = default;
};

using EdgeSet = std::vector<Mask>; // sorted, unique

bool edge_set_contains(const EdgeSet& sorted, const Mask& e);
void sort_edge_set(EdgeSet& edges);

struct ColoredHypergraph {
    VertexUniverse universe;
    EdgeSet edges; // sorted ascending by mask value

    /// Index into `edges`, or -1 when absent.
    int index_of(const Mask& e) const;
    bool has_edge(const Mask& e) const { return index_of(e) >= 0; }
};

/// Host K[S; n]: one edge for every vertex subset whose color profile lies
/// in S. Throws on dimension mismatch or a profile exceeding n.
ColoredHypergraph build_host(const ParamVec& n, const std::vector<ParamVec>& S);

ParamVec edge_profile(const Mask& e, const VertexUniverse& u);

/// Per-color vertex choices R_i; parts[i] must stay inside color class i.
struct PartsChoice {
    std::vector<Mask> parts;

    ParamVec part_sizes() const;
    Mask union_mask() const;
};

/// Builds a PartsChoice from 0-based per-color index lists.
PartsChoice parts_from_indices(const VertexUniverse& u,
                               const std::vector<std::vector<int>>& lists);

/// Edges of the colored copy of K[S; (|R_i|)_i] on the given parts: all
/// W ⊆ ∪R_i with per-color profile in S. Sorted ascending.
EdgeSet copy_edges(const PartsChoice& parts, const std::vector<ParamVec>& S,
                   const VertexUniverse& u);

bool is_copy_complete(const PartsChoice& parts, const std::vector<ParamVec>& S,
                      const VertexUniverse& u, const EdgeSet& current);

/// Visits one k[i]-subset of pools[i] per color, passing the per-color masks.
/// Callback returns true to abort; function reports whether it was aborted.
template <typename F>
bool for_each_color_subsets(const std::vector<Mask>& pools, const ParamVec& k, F&& f) {
    const int d = static_cast<int>(pools.size());
    std::vector<Mask> chosen(static_cast<std::size_t>(d));
    auto rec = [&](auto&& self, int color) -> bool {
        if (color == d) return f(const_cast<const std::vector<Mask>&>(chosen));
        return for_each_subset(pools[static_cast<std::size_t>(color)],
                               k[static_cast<std::size_t>(color)], [&](const Mask& sub) {
                                   chosen[static_cast<std::size_t>(color)] = sub;
                                   return self(self, color + 1);
                               });
    };
    return rec(rec, 0);
}

} // namespace wsat
