#pragma once

#include <string>
#include <vector>

#include "wsat/formulas.hpp"
#include "wsat/hypergraph.hpp"

namespace wsat {

enum class CopyMode { colored, uncolored };

/// How uncolored copy search is carried out. `automatic` reduces to colored
/// search over reduction_family(R, S) whenever reduction_conditions holds and
/// otherwise falls back to exhaustive part-system placement (universes up to
/// 14 vertices). The fallback is flagged in the resulting trace.
enum class UncoloredStrategy { automatic, reduction, exhaustive };

struct PercolationStep {
    Mask edge;
    ParamVec pattern;        // the r of the witness copy
    std::vector<Mask> parts; // witness parts; colored mode keeps parts[i] in class i
};

struct PercolationTrace {
    CopyMode mode = CopyMode::colored;
    bool fallback = false;
    EdgeSet start;
    std::vector<PercolationStep> steps;
};

struct ClosureResult {
    EdgeSet edges;
    PercolationTrace trace;
};

/// Maximal percolation closure of `start` inside the host: repeatedly add a
/// host edge completing a copy of K[S;r] for some r in the pattern family
/// until none qualifies. Candidates are scanned in mask order (or in
/// `scan_order`, a permutation of edge indices, used by order-independence
/// tests). The result set is order-independent; the trace is one witness run.
ClosureResult closure(const ColoredHypergraph& host, const std::vector<ParamVec>& S,
                      const std::vector<ParamVec>& R, const EdgeSet& start, CopyMode mode,
                      UncoloredStrategy strategy = UncoloredStrategy::automatic,
                      const std::vector<int>* scan_order = nullptr);

struct VerifyResult {
    bool ok = false;
    int failed_step = -1; // -1: no specific step
    std::string reason;
};

/// Replays a trace: every step must add a fresh host edge lying in its
/// witness copy whose remaining edges are already present, and the trace must
/// end with all host edges present.
VerifyResult verify_trace(const ColoredHypergraph& host, const std::vector<ParamVec>& S,
                          const std::vector<ParamVec>& R, const EdgeSet& start,
                          const PercolationTrace& trace, CopyMode mode);

/// Exact colored weak saturation number by iterative-deepening search above
/// the formula lower bound, with monotonicity pruning. Requires
/// |E(host)| <= edge_cap.
Count cwsat_bruteforce(const ColoredHypergraph& host, const std::vector<ParamVec>& S,
                       const std::vector<ParamVec>& R, int edge_cap = 24);

/// Exact uncolored weak saturation number; same search in uncolored mode.
Count wsat_bruteforce_uncolored(const ColoredHypergraph& host, const std::vector<ParamVec>& S,
                                const std::vector<ParamVec>& R, int edge_cap = 24,
                                UncoloredStrategy strategy = UncoloredStrategy::automatic);

} // namespace wsat
