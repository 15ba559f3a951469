#include "wsat/percolation.hpp"

#include <algorithm>
#include <optional>

namespace wsat {

namespace {

constexpr int kExhaustiveVertexCap = 14;

struct Witness {
    ParamVec pattern;
    std::vector<Mask> parts;
};

// Colored copy search around a candidate edge: a witness exists iff for some
// pattern r the candidate's per-color vertices extend to parts of sizes r
// whose copy misses no edge other than the candidate.
class ColoredFinder {
public:
    ColoredFinder(const ColoredHypergraph& host, std::vector<ParamVec> S,
                  std::vector<ParamVec> patterns)
        : host_(host), S_(std::move(S)), patterns_(std::move(patterns)) {
        for (int i = 0; i < host_.universe.dim(); ++i)
            class_masks_.push_back(host_.universe.class_mask(i));
    }

    std::optional<Witness> find(const Mask& e, const std::vector<char>& present) const {
        const int d = host_.universe.dim();
        const ParamVec eprof = host_.universe.profile(e);
        std::vector<Mask> pools(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
            pools[static_cast<std::size_t>(i)] = class_masks_[static_cast<std::size_t>(i)].minus(e);

        std::optional<Witness> found;
        for (const auto& r : patterns_) {
            bool fits = true;
            ParamVec need(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) {
                need[static_cast<std::size_t>(i)] =
                    r[static_cast<std::size_t>(i)] - eprof[static_cast<std::size_t>(i)];
                if (need[static_cast<std::size_t>(i)] < 0) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            for_each_color_subsets(pools, need, [&](const std::vector<Mask>& extra) {
                std::vector<Mask> parts(static_cast<std::size_t>(d));
                for (int i = 0; i < d; ++i)
                    parts[static_cast<std::size_t>(i)] =
                        extra[static_cast<std::size_t>(i)] |
                        (e & class_masks_[static_cast<std::size_t>(i)]);
                if (copy_complete_except(parts, e, present)) {
                    found = Witness{r, parts};
                    return true;
                }
                return false;
            });
            if (found) break;
        }
        return found;
    }

private:
    bool copy_complete_except(const std::vector<Mask>& parts, const Mask& e,
                              const std::vector<char>& present) const {
        for (const auto& s : S_) {
            bool missing = for_each_color_subsets(parts, s, [&](const std::vector<Mask>& chosen) {
                Mask w;
                for (const auto& p : chosen) w = w | p;
                if (w == e) return false;
                // parts sit inside color classes, so w is always a host edge
                const int idx = host_.index_of(w);
                return !present[static_cast<std::size_t>(idx)];
            });
            if (missing) return false;
        }
        return true;
    }

    const ColoredHypergraph& host_;
    std::vector<ParamVec> S_;
    std::vector<ParamVec> patterns_;
    std::vector<Mask> class_masks_;
};

// Uncolored copy search: parts are arbitrary disjoint vertex sets. A part
// system is a copy only when every edge it generates is a host edge.
class UncoloredFinder {
public:
    UncoloredFinder(const ColoredHypergraph& host, std::vector<ParamVec> S,
                    std::vector<ParamVec> patterns)
        : host_(host), S_(std::move(S)), patterns_(std::move(patterns)) {
        if (host_.universe.total > kExhaustiveVertexCap)
            throw InvalidInput("uncolored exhaustive search is capped at " +
                               std::to_string(kExhaustiveVertexCap) + " vertices");
    }

    std::optional<Witness> find(const Mask& e, const std::vector<char>& present) const {
        const Mask universe = host_.universe.full_mask();
        std::optional<Witness> found;
        for (const auto& r : patterns_) {
            if (vec_total(r) > host_.universe.total) continue;
            std::vector<Mask> parts(r.size());
            if (place_parts(r, 0, universe, e, e, parts, present, found)) break;
        }
        return found;
    }

private:
    // DFS over ordered disjoint parts; the candidate edge must end up covered.
    bool place_parts(const ParamVec& r, std::size_t j, const Mask& avail, const Mask& e,
                     const Mask& e_rem, std::vector<Mask>& parts,
                     const std::vector<char>& present, std::optional<Witness>& found) const {
        if (j == r.size()) {
            if (!e_rem.empty()) return false;
            return check_system(r, parts, e, present, found);
        }
        long capacity_left = 0;
        for (std::size_t t = j; t < r.size(); ++t) capacity_left += r[t];
        if (e_rem.count() > capacity_left) return false;
        return for_each_subset(avail, r[j], [&](const Mask& q) {
            parts[j] = q;
            return place_parts(r, j + 1, avail.minus(q), e, e_rem.minus(q), parts, present,
                               found);
        });
    }

    bool check_system(const ParamVec& r, const std::vector<Mask>& parts, const Mask& e,
                      const std::vector<char>& present, std::optional<Witness>& found) const {
        // the candidate must be one of the copy's edges
        ParamVec eprof(parts.size());
        for (std::size_t j = 0; j < parts.size(); ++j) eprof[j] = (e & parts[j]).count();
        if (!std::binary_search(S_.begin(), S_.end(), eprof)) return false;

        for (const auto& s : S_) {
            bool bad = for_each_color_subsets(parts, s, [&](const std::vector<Mask>& chosen) {
                Mask w;
                for (const auto& p : chosen) w = w | p;
                if (w == e) return false;
                const int idx = host_.index_of(w);
                if (idx < 0) return true; // generated edge missing from the host: not a copy
                return !present[static_cast<std::size_t>(idx)];
            });
            if (bad) return false;
        }
        found = Witness{r, parts};
        return true;
    }

    const ColoredHypergraph& host_;
    std::vector<ParamVec> S_;
    std::vector<ParamVec> patterns_;
};

struct SearchEngine {
    std::optional<ColoredFinder> colored;
    std::optional<UncoloredFinder> uncolored;
    bool fallback = false;

    std::optional<Witness> find(const Mask& e, const std::vector<char>& present) const {
        return colored ? colored->find(e, present) : uncolored->find(e, present);
    }
};

SearchEngine make_engine(const ColoredHypergraph& host, const std::vector<ParamVec>& S,
                         const std::vector<ParamVec>& R, CopyMode mode,
                         UncoloredStrategy strategy) {
    const auto& n = host.universe.sizes;
    validate_family(n, S, R);
    const auto sf = canonical_family(S, "S");
    const auto rf = canonical_family(R, "R");

    SearchEngine engine;
    if (mode == CopyMode::colored) {
        engine.colored.emplace(host, sf, fitting_in(rf, n));
        return engine;
    }
    if (strategy == UncoloredStrategy::automatic)
        strategy = reduction_conditions(sf, rf) ? UncoloredStrategy::reduction
                                                : UncoloredStrategy::exhaustive;
    if (strategy == UncoloredStrategy::reduction) {
        engine.colored.emplace(host, sf, fitting_in(reduction_family(rf, sf), n));
    } else {
        engine.uncolored.emplace(host, sf, rf);
        engine.fallback = true;
    }
    return engine;
}

std::vector<char> present_from_start(const ColoredHypergraph& host, const EdgeSet& start) {
    std::vector<char> present(host.edges.size(), 0);
    for (const Mask& e : start) {
        const int idx = host.index_of(e);
        if (idx < 0) throw InvalidInput("start edge outside the host");
        present[static_cast<std::size_t>(idx)] = 1;
    }
    return present;
}

// One fixpoint loop shared by the traced closure and the oracles' fast path.
// sink(edge_index, witness) is invoked for every addition.
template <typename Sink>
void run_closure(const ColoredHypergraph& host, const SearchEngine& engine,
                 std::vector<char>& present, Sink&& sink, const std::vector<int>* scan_order) {
    const int m = static_cast<int>(host.edges.size());
    std::vector<int> order;
    if (scan_order) {
        order = *scan_order;
        if (static_cast<int>(order.size()) != m)
            throw InvalidInput("scan order must be a permutation of edge indices");
    } else {
        order.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
    }
    bool progress = true;
    while (progress) {
        progress = false;
        for (int idx : order) {
            if (present[static_cast<std::size_t>(idx)]) continue;
            auto witness = engine.find(host.edges[static_cast<std::size_t>(idx)], present);
            if (!witness) continue;
            present[static_cast<std::size_t>(idx)] = 1;
            sink(idx, *witness);
            progress = true;
        }
    }
}

} // namespace

ClosureResult closure(const ColoredHypergraph& host, const std::vector<ParamVec>& S,
                      const std::vector<ParamVec>& R, const EdgeSet& start, CopyMode mode,
                      UncoloredStrategy strategy, const std::vector<int>* scan_order) {
    const SearchEngine engine = make_engine(host, S, R, mode, strategy);
    std::vector<char> present = present_from_start(host, start);

    ClosureResult result;
    result.trace.mode = mode;
    result.trace.fallback = engine.fallback;
    result.trace.start = start;
    sort_edge_set(result.trace.start);

    run_closure(host, engine, present, [&](int idx, const Witness& w) {
        result.trace.steps.push_back(
            PercolationStep{host.edges[static_cast<std::size_t>(idx)], w.pattern, w.parts});
    }, scan_order);

    for (std::size_t i = 0; i < present.size(); ++i)
        if (present[i]) result.edges.push_back(host.edges[i]);
    return result;
}

VerifyResult verify_trace(const ColoredHypergraph& host, const std::vector<ParamVec>& S,
                          const std::vector<ParamVec>& R, const EdgeSet& start,
                          const PercolationTrace& trace, CopyMode mode) {
    const auto& n = host.universe.sizes;
    validate_family(n, S, R);
    const auto sf = canonical_family(S, "S");
    const auto rf = canonical_family(R, "R");
    // Patterns acceptable for a step: colored copies use R itself; uncolored
    // witnesses may carry any permuted pattern from the reduction closure,
    // which indexes the same uncolored hypergraphs.
    const auto acceptable =
        mode == CopyMode::colored ? rf : reduction_family(rf, sf);

    std::vector<char> present;
    try {
        present = present_from_start(host, start);
    } catch (const InvalidInput&) {
        return {false, -1, "start edge outside the host"};
    }

    const int d = host.universe.dim();
    for (std::size_t step_idx = 0; step_idx < trace.steps.size(); ++step_idx) {
        const auto& step = trace.steps[step_idx];
        const int si = static_cast<int>(step_idx);
        const int edge_idx = host.index_of(step.edge);
        if (edge_idx < 0) return {false, si, "edge outside host"};
        if (present[static_cast<std::size_t>(edge_idx)])
            return {false, si, "edge already present"};
        if (!std::binary_search(acceptable.begin(), acceptable.end(), step.pattern))
            return {false, si, "pattern not in the family"};
        if (static_cast<int>(step.parts.size()) != d)
            return {false, si, "witness part count mismatch"};

        Mask seen;
        for (std::size_t j = 0; j < step.parts.size(); ++j) {
            const Mask& part = step.parts[j];
            if (part.intersects(seen)) return {false, si, "witness parts overlap"};
            seen = seen | part;
            if (!part.subset_of(host.universe.full_mask()))
                return {false, si, "witness part outside universe"};
            if (part.count() != step.pattern[j]) return {false, si, "wrong profile"};
            if (mode == CopyMode::colored &&
                !part.subset_of(host.universe.class_mask(static_cast<int>(j))))
                return {false, si, "witness part crosses color classes"};
        }

        // the witness copy must contain the new edge and miss nothing else
        bool contains_edge = false;
        bool complete = true;
        std::string why;
        for (const auto& s : sf) {
            bool bad = for_each_color_subsets(step.parts, s, [&](const std::vector<Mask>& ch) {
                Mask w;
                for (const auto& p : ch) w = w | p;
                if (w == step.edge) {
                    contains_edge = true;
                    return false;
                }
                const int idx = host.index_of(w);
                if (idx < 0) {
                    why = "witness copy uses a non-host edge";
                    return true;
                }
                if (!present[static_cast<std::size_t>(idx)]) {
                    why = "witness incomplete";
                    return true;
                }
                return false;
            });
            if (bad) {
                complete = false;
                break;
            }
        }
        if (!complete) return {false, si, why};
        if (!contains_edge) return {false, si, "added edge not in the witness copy"};
        present[static_cast<std::size_t>(edge_idx)] = 1;
    }

    for (std::size_t i = 0; i < present.size(); ++i)
        if (!present[i]) return {false, -1, "trace does not reach the full host"};
    return {true, -1, ""};
}

namespace {

// Iterative-deepening minimum search shared by both oracles. `floor` must be
// a valid lower bound for the saturation number.
Count minimum_saturation(const ColoredHypergraph& host, const SearchEngine& engine,
                         long floor_value, int edge_cap) {
    const int m = static_cast<int>(host.edges.size());
    if (m > edge_cap)
        throw InvalidInput("brute-force oracle capped at " + std::to_string(edge_cap) +
                           " edges, host has " + std::to_string(m));

    auto percolates = [&](const std::vector<char>& start_present) {
        std::vector<char> present = start_present;
        run_closure(host, engine, present, [](int, const Witness&) {}, nullptr);
        for (char p : present)
            if (!p) return false;
        return true;
    };

    // Edges belonging to no copy at all can never be added.
    std::vector<int> forced, optional;
    {
        std::vector<char> all(host.edges.size(), 1);
        for (int i = 0; i < m; ++i) {
            if (engine.find(host.edges[static_cast<std::size_t>(i)], all))
                optional.push_back(i);
            else
                forced.push_back(i);
        }
    }

    std::vector<char> base(host.edges.size(), 0);
    for (int i : forced) base[static_cast<std::size_t>(i)] = 1;

    const long start_k = std::max(floor_value, static_cast<long>(forced.size()));
    const int opt_count = static_cast<int>(optional.size());

    for (long k = std::max(start_k, 0L); k <= m; ++k) {
        const int k_opt = static_cast<int>(k) - static_cast<int>(forced.size());
        if (k_opt < 0 || k_opt > opt_count) continue;

        std::vector<char> chosen = base;
        // DFS with monotonicity pruning: excluding an edge shrinks the best
        // reachable superset, so re-check percolation at exclusion points.
        auto dfs = [&](auto&& self, int pos, int picked) -> bool {
            if (picked == k_opt) return percolates(chosen);
            if (opt_count - pos < k_opt - picked) return false;
            const int e = optional[static_cast<std::size_t>(pos)];
            chosen[static_cast<std::size_t>(e)] = 1;
            if (self(self, pos + 1, picked + 1)) return true;
            chosen[static_cast<std::size_t>(e)] = 0;
            // suffix pool without e: bail out unless it can still percolate
            std::vector<char> pool = chosen;
            for (int q = pos + 1; q < opt_count; ++q)
                pool[static_cast<std::size_t>(optional[static_cast<std::size_t>(q)])] = 1;
            if (!percolates(pool)) return false;
            return self(self, pos + 1, picked);
        };
        if (k_opt == 0) {
            if (percolates(chosen)) return k;
            continue;
        }
        if (dfs(dfs, 0, 0)) return k;
    }
    // unreachable: taking every edge always percolates vacuously
    throw InternalError("minimum_saturation: no percolating subset found");
}

} // namespace

Count cwsat_bruteforce(const ColoredHypergraph& host, const std::vector<ParamVec>& S,
                       const std::vector<ParamVec>& R, int edge_cap) {
    const SearchEngine engine = make_engine(host, S, R, CopyMode::colored,
                                            UncoloredStrategy::automatic);
    const FormulaResult formula = cwsat_formula(host.universe.sizes, S, R);
    long floor_value = 0;
    if (formula.cwsat > 0) {
        if (!formula.cwsat.fits_slong_p())
            throw InvalidInput("cwsat_bruteforce: formula floor out of range");
        floor_value = formula.cwsat.get_si();
    }
    return minimum_saturation(host, engine, floor_value, edge_cap);
}

Count wsat_bruteforce_uncolored(const ColoredHypergraph& host, const std::vector<ParamVec>& S,
                                const std::vector<ParamVec>& R, int edge_cap,
                                UncoloredStrategy strategy) {
    const SearchEngine engine = make_engine(host, S, R, CopyMode::uncolored, strategy);
    return minimum_saturation(host, engine, 0, edge_cap);
}

} // namespace wsat
