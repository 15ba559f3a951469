#pragma once

#include <gmpxx.h>

#include <vector>

#include "wsat/params.hpp"

namespace wsat {

/// Exact nonnegative count; all formula evaluation is integer-exact.
using Count = mpz_class;

/// C(top, bottom) with the total convention: 0 whenever bottom < 0 or
/// top < bottom (including negative tops).
Count binomial(long top, long bottom);

/// ↓S = {m >= 0 : m <= s componentwise for some s in S}, sorted.
std::vector<ParamVec> down_closure(const std::vector<ParamVec>& S);

/// |E(K[S; n])| = sum over s in S of prod_i C(n_i, s_i).
Count host_edge_count(const ParamVec& n, const std::vector<ParamVec>& S);

/// The double sum
///   q(n, S, R) = sum_{m in ↓S} sum_{∅≠Q⊆R(n)} (-1)^{|Q|+1}
///                prod_{i: m_i≠0} C(m_i - 1 + n_i - max_{r in Q} r_i, m_i)
/// with the empty product equal to 1 and q = 0 when R(n) is empty.
Count q_value(const ParamVec& n, const std::vector<ParamVec>& S, const std::vector<ParamVec>& R);

enum class TightCase { none, min_r, max_s };

struct FormulaResult {
    Count host_edges;
    Count q;
    Count cwsat; // host_edges - q; exact when a tightness hypothesis holds
    bool tight_guaranteed = false;
    TightCase tight_case = TightCase::none;
};

FormulaResult cwsat_formula(const ParamVec& n, const std::vector<ParamVec>& S,
                            const std::vector<ParamVec>& R);

/// Single-pattern collapse: sum_{m in ↓S} prod_{i: m_i≠0} C(m_i-1+n_i-r_i, m_i).
/// Requires n_i >= r_i >= s_i for all s in S.
Count q_single(const ParamVec& n, const std::vector<ParamVec>& S, const ParamVec& r);

/// Tuple count for the symmetric (constant s) family: the number of
/// T in prod_i C([n_i], s) admitting r in R and a permutation sigma with
/// T_i ⊆ [n_i] \ [r_sigma(i) - s]. Evaluated by inclusion-exclusion over the
/// permutation closure of R.
Count q_tilde(const ParamVec& n, int s, const std::vector<ParamVec>& R, int dim_cap = 8);

/// f: [d] -> [d], stored 0-based: map[j] = f(j).
struct IndexFunction {
    std::vector<int> map;

    bool operator==(const IndexFunction&) const = default;
    bool operator<(const IndexFunction& o) const { return map < o.map; }
    bool is_permutation() const;
};

/// (v ∘ f)_i = sum_{j in f^{-1}(i)} v_j.
ParamVec convolve(const ParamVec& v, const IndexFunction& f);

/// Conv(S) = {f : [d] -> [d] | s ∘ f in S for all s in S}; enumerates all
/// d^d functions, so d is capped.
std::vector<IndexFunction> conv_set(const std::vector<ParamVec>& S, int dim_cap = 8);

/// R ∘ (Conv(S) ∩ S_d): closure of R under the S-compatible permutations.
std::vector<ParamVec> reduction_family(const std::vector<ParamVec>& R,
                                       const std::vector<ParamVec>& S, int dim_cap = 8);

/// The three hypotheses under which uncolored weak saturation reduces to
/// colored weak saturation over reduction_family(R, S):
///   1. Conv(S) contains only permutations,
///   2. no two profiles differ by exactly 1 in any coordinate,
///   3. for every i and r in R some s in S has s_i != 0 and r_i >= s_i + 1.
bool reduction_conditions(const std::vector<ParamVec>& S, const std::vector<ParamVec>& R,
                          int dim_cap = 8);

/// Uncolored weak saturation for the constant profile (s, ..., s):
/// prod_i C(n_i, s) - q_tilde(n, s, R) for s >= 1; for s = 0 the value is 0
/// when some pattern fits (sum r_i <= sum n_i) and 1 otherwise.
Count wsat_formula_symmetric(const ParamVec& n, int s, const std::vector<ParamVec>& R,
                             int dim_cap = 8);

} // namespace wsat
