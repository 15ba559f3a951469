#pragma once

#include <string>

#include "wsat/certificate.hpp"
#include "wsat/constructions.hpp"
#include "wsat/exterior.hpp"
#include "wsat/hypergraph.hpp"
#include "wsat/percolation.hpp"

namespace wsat {

/*
 * Shared JSON formats. Vertices are 1-based [a, i] pairs (index a within
 * color class i). Counts are emitted as JSON numbers when they fit in 64
 * bits and as decimal strings otherwise. Object keys serialize in sorted
 * order, so identical inputs yield byte-identical documents.
 *
 *   hypergraph   {"d": 2, "n": [4,4], "edges": [[[1,1],[2,1],[1,2]], ...]}
 *   trace        {"mode": "colored", "fallback": false,
 *                 "start": [edges...],
 *                 "steps": [{"edge": [[a,i]...], "r": [...],
 *                            "witness": [[a...] per color]}, ...]}
 *                 (uncolored witnesses carry [a,i] pairs per part)
 *   formula      {"n": [...], "S": [[...]], "R": [[...]],
 *                 "q": int, "cwsat": int, "tight_guaranteed": bool}
 *   construction trace plus {"removed_count": int, "formula": int}
 *   certificate  report fields plus the basis seed
 *   basis        {"blocks": [[["p/q", ...], ...], ...], "seed": int,
 *                 "verified_minors": bool}
 */

std::string hypergraph_to_json(const ColoredHypergraph& g);
ColoredHypergraph hypergraph_from_json(const std::string& text);

/// Reads the "edges" array of a hypergraph document against a known universe.
EdgeSet edges_from_json(const std::string& text, const VertexUniverse& u);

std::string trace_to_json(const PercolationTrace& trace, const VertexUniverse& u);
PercolationTrace trace_from_json(const std::string& text, const VertexUniverse& u);

std::string formula_to_json(const ParamVec& n, const std::vector<ParamVec>& S,
                            const std::vector<ParamVec>& R, const FormulaResult& result);

std::string construction_to_json(const ConstructionResult& result, const VertexUniverse& u);

std::string certificate_to_json(const CertificateReport& report);

std::string basis_to_json(const ColorfulBasis& basis);

const char* tight_case_name(TightCase c);

} // namespace wsat
