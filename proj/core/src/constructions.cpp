#include "wsat/constructions.hpp"

#include <algorithm>
#include <set>

namespace wsat {

namespace {

// Per-color comparison key (m_i, T_i descending); edges are added in
// lexicographic order of the key tuples. Any linear extension of
// componentwise tuple containment validates the percolation order, and this
// one also groups additions by m.
using OrderKey = std::vector<std::pair<int, std::vector<int>>>;

OrderKey order_key(const std::vector<std::vector<int>>& tuple) {
    OrderKey key;
    key.reserve(tuple.size());
    for (const auto& t : tuple) key.emplace_back(static_cast<int>(t.size()), t);
    return key;
}

std::vector<std::vector<int>> descending_tuple(const std::vector<Mask>& per_color,
                                               const VertexUniverse& u) {
    std::vector<std::vector<int>> tuple(per_color.size());
    for (std::size_t i = 0; i < per_color.size(); ++i) {
        const int offset = u.offsets[i];
        per_color[i].for_each_bit([&](int pos) { tuple[i].push_back(pos - offset); });
        std::sort(tuple[i].rbegin(), tuple[i].rend());
    }
    return tuple;
}

ConstructionResult assemble(const ColoredHypergraph& host, std::vector<RemovedEdge> removed,
                            std::vector<PercolationStep> steps, Count formula) {
    // removal injectivity and the size ledger |F| + |removed| = |E|
    {
        EdgeSet seen;
        for (const auto& rm : removed) seen.push_back(rm.edge);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw InternalError("construction removed the same edge twice");
    }
    ConstructionResult res;
    EdgeSet removed_sorted;
    removed_sorted.reserve(removed.size());
    for (const auto& rm : removed) removed_sorted.push_back(rm.edge);
    std::sort(removed_sorted.begin(), removed_sorted.end());
    for (const Mask& e : host.edges)
        if (!edge_set_contains(removed_sorted, e)) res.surviving.push_back(e);

    res.order.mode = CopyMode::colored;
    res.order.start = res.surviving;
    res.order.steps = std::move(steps);
    res.removed = std::move(removed);
    res.formula = std::move(formula);
    return res;
}

} // namespace

ConstructionResult construct_min_r(const ParamVec& n, const std::vector<ParamVec>& S,
                                   const std::vector<ParamVec>& R, SChoice rule) {
    validate_family(n, S, R);
    const auto sf = canonical_family(S, "S");
    const auto rf = canonical_family(R, "R");
    const auto rmin = componentwise_min_member(rf);
    if (!rmin) throw InvalidInput("construct_min_r: R has no componentwise minimum");
    const ParamVec rt = *rmin; // r~
    if (!leq(rt, n)) throw InvalidInput("construct_min_r: minimum pattern exceeds n");

    const ColoredHypergraph host = build_host(n, sf);
    const VertexUniverse& u = host.universe;
    const int d = u.dim();

    struct Entry {
        OrderKey key;
        RemovedEdge rm;
        PercolationStep step;
    };
    std::vector<Entry> entries;

    for (const auto& m : down_closure(sf)) {
        // s_m: admissible profile covering m, fixed by the rule
        const ParamVec* sm = nullptr;
        for (const auto& s : sf) {
            if (!leq(m, s)) continue;
            if (!sm || (rule == SChoice::lex_least ? s < *sm : *sm < s)) sm = &s;
        }
        if (!sm) throw InternalError("construct_min_r: no admissible s for a closure vector");

        // pools: per color the top n_i - (r~_i - m_i + 1) indices
        std::vector<Mask> pools(static_cast<std::size_t>(d));
        ParamVec want(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            const std::size_t ii = static_cast<std::size_t>(i);
            const int lo = rt[ii] - m[ii] + 1; // 1-based bound of the removed prefix
            const int from = std::max(lo, 0);
            pools[ii] = Mask::range(u.offsets[ii] + from, std::max(n[ii] - from, 0));
            want[ii] = m[ii];
        }
        for_each_color_subsets(pools, want, [&](const std::vector<Mask>& chosen) {
            Mask edge;
            std::vector<Mask> parts(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) {
                const std::size_t ii = static_cast<std::size_t>(i);
                const Mask prefix = Mask::range(u.offsets[ii], (*sm)[ii] - m[ii]);
                edge = edge | chosen[ii] | prefix;
                parts[ii] = chosen[ii] | Mask::range(u.offsets[ii], rt[ii] - m[ii]);
            }
            Entry en;
            en.rm = RemovedEdge{edge, m, descending_tuple(chosen, u)};
            en.key = order_key(en.rm.tuple);
            en.step = PercolationStep{edge, rt, parts};
            entries.push_back(std::move(en));
            return false;
        });
    }

    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.key < b.key; });

    std::vector<RemovedEdge> removed;
    std::vector<PercolationStep> steps;
    for (auto& en : entries) {
        removed.push_back(std::move(en.rm));
        steps.push_back(std::move(en.step));
    }
    return assemble(host, std::move(removed), std::move(steps),
                    cwsat_formula(n, sf, rf).cwsat);
}

ConstructionResult construct_max_s(const ParamVec& n, const std::vector<ParamVec>& S,
                                   const std::vector<ParamVec>& R) {
    validate_family(n, S, R);
    const auto sf = canonical_family(S, "S");
    const auto rf = canonical_family(R, "R");
    const auto smax = componentwise_max_member(sf);
    if (!smax) throw InvalidInput("construct_max_s: S has no componentwise maximum");
    const ParamVec st = *smax; // s~
    const auto rn = fitting_in(rf, n);
    if (rn.empty()) throw InvalidInput("construct_max_s: R(n) is empty");

    const ColoredHypergraph host = build_host(n, sf);
    const VertexUniverse& u = host.universe;
    const int d = u.dim();

    struct Entry {
        OrderKey key;
        RemovedEdge rm;
        PercolationStep step;
    };
    std::vector<Entry> entries;
    std::set<Mask> already;

    // union over r in R(n); the first admitting r in sorted order labels the edge
    for (const auto& r : rn) {
        std::vector<Mask> pools(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            const std::size_t ii = static_cast<std::size_t>(i);
            const int from = std::max(r[ii] - st[ii], 0);
            pools[ii] = Mask::range(u.offsets[ii] + from, std::max(n[ii] - from, 0));
        }
        for_each_color_subsets(pools, st, [&](const std::vector<Mask>& chosen) {
            Mask edge;
            for (const auto& part : chosen) edge = edge | part;
            if (!already.insert(edge).second) return false;

            std::vector<Mask> parts(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) {
                const std::size_t ii = static_cast<std::size_t>(i);
                parts[ii] = chosen[ii] | Mask::range(u.offsets[ii], r[ii] - st[ii]);
            }
            Entry en;
            en.rm = RemovedEdge{edge, r, descending_tuple(chosen, u)};
            en.key = order_key(en.rm.tuple);
            en.step = PercolationStep{edge, r, parts};
            entries.push_back(std::move(en));
            return false;
        });
    }

    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.key < b.key; });

    std::vector<RemovedEdge> removed;
    std::vector<PercolationStep> steps;
    for (auto& en : entries) {
        removed.push_back(std::move(en.rm));
        steps.push_back(std::move(en.step));
    }
    return assemble(host, std::move(removed), std::move(steps),
                    cwsat_formula(n, sf, rf).cwsat);
}

std::pair<ParamVec, std::vector<std::vector<int>>> min_r_label(const Mask& edge,
                                                               const VertexUniverse& u) {
    const int d = u.dim();
    ParamVec m(static_cast<std::size_t>(d), 0);
    std::vector<std::vector<int>> tuple(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        const Mask part = edge & u.class_mask(i);
        int prefix = 0;
        while (prefix < u.sizes[ii] && part.test(u.bit(i, prefix))) ++prefix;
        part.for_each_bit([&](int pos) {
            const int idx = pos - u.offsets[ii];
            if (idx >= prefix) tuple[ii].push_back(idx);
        });
        std::sort(tuple[ii].rbegin(), tuple[ii].rend());
        m[ii] = static_cast<int>(tuple[ii].size());
    }
    return {m, tuple};
}

} // namespace wsat
