#pragma once

#include <cstdint>
#include <vector>

#include "wsat/exterior.hpp"
#include "wsat/formulas.hpp"
#include "wsat/hypergraph.hpp"

namespace wsat {

/*
 * Lower-bound certificate. For each pattern r the vector
 *
 *     g_r = sum over s in S of (-1)^{q_1(r,s)} wedge_i f_{([r_i]\[s_i]) x {i}}
 *
 * is contracted against every vertex set of profile r; the span U of these
 * contractions satisfies dim U <= q(n, S, R), every colored copy has an
 * element of U supported exactly on its edge set, and therefore
 * c-wsat >= |E(host)| - dim U.
 */

ExtElement g_vector(const ParamVec& r, const std::vector<ParamVec>& S,
                    const ColorfulBasis& basis);

/// One generator g_r ⌟ e_R per r in R(n) and vertex set R of profile r.
/// Every generator is supported on host edges only.
std::vector<ExtElement> span_generators(const ParamVec& n, const std::vector<ParamVec>& S,
                                        const std::vector<ParamVec>& R,
                                        const ColorfulBasis& basis);

/// Exact rank of the generators over host-edge coordinates.
int dim_U(const std::vector<ExtElement>& generators, const ColoredHypergraph& host);

/// Checks supp(g_r ⌟ e_{V(copy)}) = E(copy) for every colored copy.
bool support_condition(const ColoredHypergraph& host, const std::vector<ParamVec>& S,
                       const std::vector<ParamVec>& R, const ColorfulBasis& basis);

struct CertificateReport {
    Count edge_count;
    int dim_u = 0;
    Count q;
    Count bound; // edge_count - dim_u, a certified lower bound for c-wsat
    Count formula_cwsat;
    bool support_ok = false;
    TightCase tight_case = TightCase::none;
    bool dim_equals_q = false; // observation, not asserted
    std::uint64_t seed = 0;
};

/// Builds a verified basis, materializes U, and assembles the report.
/// Throws InternalError when dim U exceeds q or the support condition fails,
/// since those only happen with a defective basis or implementation.
CertificateReport certificate_report(const ParamVec& n, const std::vector<ParamVec>& S,
                                     const std::vector<ParamVec>& R, std::uint64_t seed,
                                     int block_cap = 8);

} // namespace wsat
