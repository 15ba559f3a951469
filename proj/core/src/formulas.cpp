#include "wsat/formulas.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>

namespace wsat {

Count binomial(long top, long bottom) {
    if (bottom < 0 || top < bottom) return 0;
    Count r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top),
                 static_cast<unsigned long>(bottom));
    return r;
}

std::vector<ParamVec> down_closure(const std::vector<ParamVec>& S) {
    if (S.empty()) throw InvalidInput("down_closure: S must be non-empty");
    const std::size_t d = S.front().size();
    std::set<ParamVec> out;
    for (const auto& s : S) {
        if (s.size() != d) throw InvalidInput("down_closure: mixed dimensions");
        ParamVec m(d, 0);
        while (true) {
            out.insert(m);
            std::size_t i = 0;
            while (i < d && m[i] == s[i]) m[i++] = 0;
            if (i == d) break;
            ++m[i];
        }
    }
    return {out.begin(), out.end()};
}

Count host_edge_count(const ParamVec& n, const std::vector<ParamVec>& S) {
    Count total = 0;
    for (const auto& s : S) {
        Count prod = 1;
        for (std::size_t i = 0; i < n.size(); ++i) prod *= binomial(n[i], s[i]);
        total += prod;
    }
    return total;
}

Count q_value(const ParamVec& n, const std::vector<ParamVec>& S, const std::vector<ParamVec>& R) {
    validate_family(n, S, R);
    const auto rn = fitting_in(canonical_family(R, "R"), n);
    if (rn.empty()) return 0;
    if (rn.size() > 24) throw InvalidInput("q_value: inclusion-exclusion over 2^|R(n)| too large");

    const std::size_t d = n.size();
    const auto ds = down_closure(S);

    // per nonempty Q: sign and componentwise maximum over Q
    Count q = 0;
    for (unsigned long qbits = 1; qbits < (1ul << rn.size()); ++qbits) {
        ParamVec mx(d, 0);
        for (std::size_t j = 0; j < rn.size(); ++j)
            if (qbits >> j & 1)
                for (std::size_t i = 0; i < d; ++i) mx[i] = std::max(mx[i], rn[j][i]);
        const int sign = (std::popcount(qbits) & 1) ? 1 : -1;
        for (const auto& m : ds) {
            Count term = 1;
            for (std::size_t i = 0; i < d; ++i)
                if (m[i] != 0) term *= binomial(m[i] - 1 + n[i] - mx[i], m[i]);
            q += sign * term;
        }
    }
    return q;
}

FormulaResult cwsat_formula(const ParamVec& n, const std::vector<ParamVec>& S,
                            const std::vector<ParamVec>& R) {
    validate_family(n, S, R);
    FormulaResult res;
    res.host_edges = host_edge_count(n, S);
    res.q = q_value(n, S, R);
    res.cwsat = res.host_edges - res.q;
    const bool has_max_s = componentwise_max_member(S).has_value();
    const bool has_min_r = componentwise_min_member(R).has_value();
    res.tight_guaranteed = has_max_s || has_min_r;
    res.tight_case = has_max_s   ? TightCase::max_s
                     : has_min_r ? TightCase::min_r
                                 : TightCase::none;
    return res;
}

Count q_single(const ParamVec& n, const std::vector<ParamVec>& S, const ParamVec& r) {
    validate_family(n, S, {r});
    if (!leq(r, n)) throw InvalidInput("q_single: requires r_i <= n_i");
    const std::size_t d = n.size();
    Count q = 0;
    for (const auto& m : down_closure(S)) {
        Count term = 1;
        for (std::size_t i = 0; i < d; ++i)
            if (m[i] != 0) term *= binomial(m[i] - 1 + n[i] - r[i], m[i]);
        q += term;
    }
    return q;
}

bool IndexFunction::is_permutation() const {
    std::vector<bool> seen(map.size(), false);
    for (int v : map) {
        if (v < 0 || v >= static_cast<int>(map.size()) || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

ParamVec convolve(const ParamVec& v, const IndexFunction& f) {
    if (v.size() != f.map.size()) throw InvalidInput("convolve: length mismatch");
    ParamVec out(v.size(), 0);
    for (std::size_t j = 0; j < v.size(); ++j) {
        const int i = f.map[j];
        if (i < 0 || i >= static_cast<int>(v.size()))
            throw InvalidInput("convolve: function value out of range");
        out[static_cast<std::size_t>(i)] += v[j];
    }
    return out;
}

std::vector<IndexFunction> conv_set(const std::vector<ParamVec>& S, int dim_cap) {
    const auto fam = canonical_family(S, "S");
    const int d = static_cast<int>(fam.front().size());
    if (d > dim_cap)
        throw InvalidInput("conv_set: dimension " + std::to_string(d) + " exceeds cap " +
                           std::to_string(dim_cap));
    std::vector<IndexFunction> out;
    IndexFunction f;
    f.map.assign(static_cast<std::size_t>(d), 0);
    while (true) {
        bool compatible = true;
        for (const auto& s : fam)
            if (!std::binary_search(fam.begin(), fam.end(), convolve(s, f))) {
                compatible = false;
                break;
            }
        if (compatible) out.push_back(f);
        int i = 0;
        while (i < d && f.map[static_cast<std::size_t>(i)] == d - 1)
            f.map[static_cast<std::size_t>(i++)] = 0;
        if (i == d) break;
        ++f.map[static_cast<std::size_t>(i)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ParamVec> reduction_family(const std::vector<ParamVec>& R,
                                       const std::vector<ParamVec>& S, int dim_cap) {
    std::set<ParamVec> out;
    for (const auto& f : conv_set(S, dim_cap)) {
        if (!f.is_permutation()) continue;
        for (const auto& r : R) out.insert(convolve(r, f));
    }
    return {out.begin(), out.end()};
}

bool reduction_conditions(const std::vector<ParamVec>& S, const std::vector<ParamVec>& R,
                          int dim_cap) {
    const auto sf = canonical_family(S, "S");
    const auto rf = canonical_family(R, "R");
    const std::size_t d = sf.front().size();

    for (const auto& f : conv_set(sf, dim_cap))
        if (!f.is_permutation()) return false;

    for (const auto& a : sf)
        for (const auto& b : sf)
            for (std::size_t i = 0; i < d; ++i)
                if (std::abs(a[i] - b[i]) == 1) return false;

    for (std::size_t i = 0; i < d; ++i)
        for (const auto& r : rf) {
            bool witness = false;
            for (const auto& s : sf)
                if (s[i] != 0 && r[i] >= s[i] + 1) {
                    witness = true;
                    break;
                }
            if (!witness) return false;
        }
    return true;
}

Count q_tilde(const ParamVec& n, int s, const std::vector<ParamVec>& R, int dim_cap) {
    check_param_vec(n, -1, "n");
    const std::size_t d = n.size();
    if (s < 0) throw InvalidInput("q_tilde: s must be nonnegative");
    for (std::size_t i = 0; i < d; ++i)
        if (n[i] < s) throw InvalidInput("q_tilde: requires n_i >= s");
    for (const auto& r : canonical_family(R, "R")) {
        check_param_vec(r, static_cast<int>(d), "R");
        for (int ri : r)
            if (ri < s) throw InvalidInput("q_tilde: requires r_i >= s");
    }
    if (static_cast<int>(d) > dim_cap) throw InvalidInput("q_tilde: dimension exceeds cap");

    // permutation closure of R = all entry rearrangements of each member
    std::set<ParamVec> closure;
    for (const auto& r : R) {
        ParamVec p = r;
        std::sort(p.begin(), p.end());
        do closure.insert(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    const ParamVec s_const(d, s);
    return q_value(n, {s_const}, {closure.begin(), closure.end()});
}

Count wsat_formula_symmetric(const ParamVec& n, int s, const std::vector<ParamVec>& R,
                             int dim_cap) {
    check_param_vec(n, -1, "n");
    const auto rf = canonical_family(R, "R");
    for (std::size_t i = 0; i < n.size(); ++i)
        if (n[i] < s) throw InvalidInput("wsat_formula_symmetric: requires n_i >= s");
    for (const auto& r : rf) {
        check_param_vec(r, static_cast<int>(n.size()), "R");
        for (int ri : r)
            if (ri < s) throw InvalidInput("wsat_formula_symmetric: requires r_i >= s");
    }
    if (s == 0) {
        for (const auto& r : rf)
            if (vec_total(r) <= vec_total(n)) return 0;
        return 1;
    }
    Count prod = 1;
    for (int ni : n) prod *= binomial(ni, s);
    return prod - q_tilde(n, s, R, dim_cap);
}

} // namespace wsat
