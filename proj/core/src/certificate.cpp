#include "wsat/certificate.hpp"

#include <algorithm>

namespace wsat {

namespace {

// Sign exponent sum_i r_i sum_{j>i} s_j. Only the ordered cross terms occur
// in the color-split sign of the interior product, and only this version
// makes the contractions for a fixed (m, T) group agree across patterns r;
// summing over all j != i flips the relative sign of some terms and the
// rank collapse onto q(n, S, R) fails.
long q1_parity_term(const ParamVec& r, const ParamVec& s) {
    long q1 = 0;
    long suffix = 0;
    for (std::size_t i = r.size(); i-- > 0;) {
        q1 += static_cast<long>(r[i]) * suffix;
        suffix += s[i];
    }
    return q1;
}

Mask wedge_index_mask(const ParamVec& r, const ParamVec& s, const VertexUniverse& u) {
    // union over colors of ([r_i] \ [s_i]) x {i}
    Mask m;
    for (int i = 0; i < u.dim(); ++i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        for (int a = s[ii]; a < r[ii]; ++a) m.set(u.bit(i, a));
    }
    return m;
}

} // namespace

ExtElement g_vector(const ParamVec& r, const std::vector<ParamVec>& S,
                    const ColorfulBasis& basis) {
    const auto sf = canonical_family(S, "S");
    check_param_vec(r, basis.dim(), "r");
    for (const auto& s : sf)
        if (!leq(s, r)) throw InvalidInput("g_vector: requires r_i >= s_i");
    VertexUniverse u(basis.sizes);
    ExtElement g = ExtElement::zero(u.total);
    for (const auto& s : sf) {
        const int sign = (q1_parity_term(r, s) & 1) ? -1 : 1;
        ExtElement term = f_subset_vector(basis, wedge_index_mask(r, s, u));
        g = g + term.scaled(sign);
    }
    return g;
}

namespace {

// Shared enumeration: for every r in R(n) and vertex set of profile r,
// invoke f(r, parts, contraction g_r ⌟ e_R). Returns false if the visitor
// aborts.
template <typename F>
bool for_each_contraction(const ColoredHypergraph& host, const std::vector<ParamVec>& S,
                          const std::vector<ParamVec>& R, const ColorfulBasis& basis, F&& f) {
    const VertexUniverse& u = host.universe;
    const auto rn = fitting_in(canonical_family(R, "R"), u.sizes);
    std::vector<Mask> class_masks;
    for (int i = 0; i < u.dim(); ++i) class_masks.push_back(u.class_mask(i));

    for (const auto& r : rn) {
        const ExtElement g = g_vector(r, S, basis);
        const bool aborted =
            for_each_color_subsets(class_masks, r, [&](const std::vector<Mask>& parts) {
                Mask vertex_set;
                for (const auto& p : parts) vertex_set = vertex_set | p;
                ExtElement m =
                    interior(g, ExtElement::basis(vertex_set, u.total));
                return f(r, parts, std::move(m));
            });
        if (aborted) return false;
    }
    return true;
}

} // namespace

std::vector<ExtElement> span_generators(const ParamVec& n, const std::vector<ParamVec>& S,
                                        const std::vector<ParamVec>& R,
                                        const ColorfulBasis& basis) {
    validate_family(n, S, R);
    if (basis.sizes != n) throw InvalidInput("span_generators: basis built for a different n");
    const ColoredHypergraph host = build_host(n, S);
    std::vector<ExtElement> gens;
    for_each_contraction(host, S, R, basis,
                         [&](const ParamVec&, const std::vector<Mask>&, ExtElement m) {
                             for (const auto& [mask, c] : m.terms)
                                 if (!host.has_edge(mask))
                                     throw InternalError(
                                         "span generator supported outside host edges");
                             gens.push_back(std::move(m));
                             return false;
                         });
    return gens;
}

int dim_U(const std::vector<ExtElement>& generators, const ColoredHypergraph& host) {
    if (generators.empty()) return 0;
    std::vector<std::vector<Rational>> rows;
    rows.reserve(generators.size());
    for (const auto& g : generators) {
        std::vector<Rational> row(host.edges.size(), Rational(0));
        for (const auto& [mask, c] : g.terms) {
            const int idx = host.index_of(mask);
            if (idx < 0) throw InvalidInput("dim_U: generator supported outside host edges");
            row[static_cast<std::size_t>(idx)] = c;
        }
        rows.push_back(std::move(row));
    }
    return matrix_rank(std::move(rows));
}

bool support_condition(const ColoredHypergraph& host, const std::vector<ParamVec>& S,
                       const std::vector<ParamVec>& R, const ColorfulBasis& basis) {
    validate_family(host.universe.sizes, S, R);
    const auto sf = canonical_family(S, "S");
    return for_each_contraction(
        host, sf, R, basis,
        [&](const ParamVec&, const std::vector<Mask>& parts, ExtElement m) {
            PartsChoice choice{parts};
            const EdgeSet expected = copy_edges(choice, sf, host.universe);
            const std::vector<Mask> supp = m.support();
            return !(supp == expected); // abort on the first mismatch
        });
}

CertificateReport certificate_report(const ParamVec& n, const std::vector<ParamVec>& S,
                                     const std::vector<ParamVec>& R, std::uint64_t seed,
                                     int block_cap) {
    validate_family(n, S, R);
    const ColorfulBasis basis = colorful_generic_basis(n, seed, block_cap);
    const ColoredHypergraph host = build_host(n, S);
    const FormulaResult formula = cwsat_formula(n, S, R);

    CertificateReport rep;
    rep.seed = seed;
    rep.edge_count = static_cast<long>(host.edges.size());
    rep.q = formula.q;
    rep.formula_cwsat = formula.cwsat;
    rep.tight_case = formula.tight_case;

    const auto gens = span_generators(n, S, R, basis);
    rep.dim_u = dim_U(gens, host);
    rep.bound = rep.edge_count - rep.dim_u;
    rep.support_ok = support_condition(host, S, R, basis);
    rep.dim_equals_q = (Count(rep.dim_u) == rep.q);

    if (Count(rep.dim_u) > rep.q)
        throw InternalError("certificate: dim U exceeds q, basis or algebra defect");
    if (!rep.support_ok)
        throw InternalError("certificate: support condition failed for a verified basis");
    return rep;
}

} // namespace wsat
