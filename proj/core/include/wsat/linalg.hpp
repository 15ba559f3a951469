#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "wsat/errors.hpp"

namespace wsat {

using Rational = mpq_class;

/// mpq_class(num, den) does not canonicalize; every fraction built from raw
/// parts must pass through here before entering arithmetic.
inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rational_from_string(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw InvalidInput("malformed rational '" + text + "'");
    r.canonicalize();
    return r;
}

struct RationalMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> a; // row-major

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static RationalMatrix identity(int n);
    bool operator==(const RationalMatrix&) const = default;
};

Rational dot_rows(const RationalMatrix& m, int i, int j);

/// Row-elimination pass over a square matrix: for i = 1..n, j = 1..i-1,
/// replace row v_i by <v_j, v_j> v_i - <v_i, v_j> v_j. Output rows are
/// pairwise orthogonal; orthonormal inputs are fixed points. Zero rows may
/// appear for singular inputs (callers check).
RationalMatrix orthogonalize(const RationalMatrix& A);

/// Scales each row to a primitive integer vector, keeping signs. Rank,
/// orthogonality, and nonzero-minor structure are invariant under this.
void make_rows_primitive(RationalMatrix& A);

Rational determinant(const RationalMatrix& A);

/// Exhaustively checks every square minor (all sizes, all row/column pairs).
bool all_minors_nonzero(const RationalMatrix& A);

/// Exact rank over the rationals: rows are scaled to primitive integer
/// vectors, then eliminated fraction-free with gcd reduction.
int matrix_rank(std::vector<std::vector<Rational>> m);

} // namespace wsat
