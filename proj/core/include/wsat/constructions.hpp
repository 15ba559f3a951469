#pragma once

#include <vector>

#include "wsat/formulas.hpp"
#include "wsat/hypergraph.hpp"
#include "wsat/percolation.hpp"

namespace wsat {

/// Rule for picking s_m in the minimum-pattern construction; the choice is
/// free in principle, so a second rule is exposed for the independence
/// experiment.
enum class SChoice { lex_least, lex_greatest };

struct RemovedEdge {
    Mask edge;
    ParamVec label;                      // m (min-r variant) or the witness r (max-s)
    std::vector<std::vector<int>> tuple; // per-color T_i or W_i, 0-based, descending
};

struct ConstructionResult {
    EdgeSet surviving; // F
    std::vector<RemovedEdge> removed; // in addition order
    PercolationTrace order;           // start = F, one step per removed edge
    Count formula;                    // cwsat_formula(n, S, R).cwsat
};

/// Keeps the host minus, for every m in ↓S, the edges
/// (T union [s_{m} - m]) per color with T_i drawn from the top
/// n_i - r~_i + m_i - 1 indices; r~ is the componentwise minimum of R.
/// The emitted order adds edges sorted by per-color keys (m_i, T_i desc).
ConstructionResult construct_min_r(const ParamVec& n, const std::vector<ParamVec>& S,
                                   const std::vector<ParamVec>& R,
                                   SChoice rule = SChoice::lex_least);

/// Keeps the host minus, for every r in R(n), the profile-s~ edges avoiding
/// the first r_i - s~_i indices per color; s~ is the componentwise maximum
/// of S. Edges are added in lexicographic order of descending part tuples.
ConstructionResult construct_max_s(const ParamVec& n, const std::vector<ParamVec>& S,
                                   const std::vector<ParamVec>& R);

/// Inverse of the min-r removal labeling: per color, strip the maximal
/// prefix [l_i] and return (m, T) with T_i the remaining indices.
std::pair<ParamVec, std::vector<std::vector<int>>> min_r_label(const Mask& edge,
                                                               const VertexUniverse& u);

} // namespace wsat
