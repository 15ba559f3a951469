#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wsat/linalg.hpp"
#include "wsat/mask.hpp"
#include "wsat/params.hpp"

namespace wsat {

/*
 * Exact-rational exterior algebra over the color-ordered vertex universe.
 *
 * The 2^n-dimensional algebra carries the subset-indexed orthonormal basis
 * {e_S}. On basis vectors,
 *
 *     e_S ∧ e_T   = sgn(S,T) e_{S∪T}          when S ∩ T = ∅, else 0,
 *     e_T ⌟ e_S   = sgn(S\T, T) e_{S\T}       when T ⊆ S, else 0,
 *     <e_S, e_T>  = [S = T],
 *
 * with sgn(S,T) = (-1)^{#{(s,t) in S x T : s > t}}. Everything below is the
 * bilinear extension of these rules.
 */

struct ExtElement {
    int universe_size = 0;
    std::map<Mask, Rational> terms; // no zero coefficients stored

    static ExtElement zero(int universe_size) { return ExtElement{universe_size, {}}; }
    static ExtElement basis(const Mask& s, int universe_size);

    void add_term(const Mask& m, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    Rational coeff(const Mask& m) const;
    std::vector<Mask> support() const;

    ExtElement operator+(const ExtElement& o) const;
    ExtElement operator-(const ExtElement& o) const;
    ExtElement scaled(const Rational& c) const;

    bool operator==(const ExtElement&) const = default;
};

ExtElement wedge(const ExtElement& x, const ExtElement& y);
Rational inner(const ExtElement& x, const ExtElement& y);
/// Left interior product x ⌟ y.
ExtElement interior(const ExtElement& x, const ExtElement& y);

/// Parity of q_1(r, s) + q_2(r, T) + q_3(s, T) for the interior-product sign
/// decomposition, where
///   q_1 = sum_i r_i sum_{j != i} s_j,
///   q_2 = sum_i r_i |T_i \ [m_i - 1]|,
///   q_3 = -sum_i s_i (|T_i \ [m_i - 1]| + sum_{j != i} s_j).
/// T is given as 0-based per-color index lists.
int sign_decompose_exponent(const ParamVec& r, const ParamVec& s, const ParamVec& m,
                            const std::vector<std::vector<int>>& T);

/// Block-diagonal dual basis: one square block per color, rows pairwise
/// orthogonal (not normalized) and every square minor nonzero. Row a of
/// block i holds the e-coordinates of f_{(a,i)}.
struct ColorfulBasis {
    ParamVec sizes;
    std::vector<RationalMatrix> blocks;
    std::uint64_t seed = 0;
    bool verified_minors = false;

    int dim() const { return static_cast<int>(sizes.size()); }
    int universe_size() const;
};

/// m x m matrix with pairwise-orthogonal rows and all square minors nonzero:
/// sample integer entries from [1, 10^4], orthogonalize, reduce rows to
/// primitive form, verify minors exhaustively, resample on failure.
RationalMatrix generic_block(int m, std::uint64_t seed, int block_cap = 8,
                             int max_attempts = 256);

ColorfulBasis colorful_generic_basis(const ParamVec& n, std::uint64_t seed, int block_cap = 8);

/// f_{(a,i)} expanded in e-coordinates.
ExtElement f_vertex(const ColorfulBasis& basis, int color, int index);

/// f_S = wedge of f_v over v in S in ascending vertex order.
ExtElement f_subset_vector(const ColorfulBasis& basis, const Mask& s);

} // namespace wsat
