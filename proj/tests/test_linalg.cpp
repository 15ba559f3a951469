#include <doctest.h>

#include <random>

#include "wsat/linalg.hpp"

using namespace wsat;

namespace {

// pivotless reference rank: plain rational Gaussian elimination
int rank_reference(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    int rank = 0;
    for (std::size_t col = 0; col < cols; ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r)
            if (m[static_cast<std::size_t>(r)][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
        for (int r = rank + 1; r < static_cast<int>(m.size()); ++r) {
            const Rational f = m[static_cast<std::size_t>(r)][col] /
                               m[static_cast<std::size_t>(rank)][col];
            if (f == 0) continue;
            for (std::size_t c = col; c < cols; ++c)
                m[static_cast<std::size_t>(r)][c] -= f * m[static_cast<std::size_t>(rank)][c];
        }
        ++rank;
    }
    return rank;
}

RationalMatrix permutation_matrix(const std::vector<int>& perm) {
    RationalMatrix p(static_cast<int>(perm.size()), static_cast<int>(perm.size()));
    for (std::size_t i = 0; i < perm.size(); ++i) p.at(static_cast<int>(i), perm[i]) = 1;
    return p;
}

} // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("orthogonalize matches the worked 2x2 example") {
    RationalMatrix a(2, 2);
    a.at(0, 0) = 1; a.at(0, 1) = 1;
    a.at(1, 0) = 1; a.at(1, 1) = 2;
    const auto b = orthogonalize(a);
    CHECK(b.at(0, 0) == 1);
    CHECK(b.at(0, 1) == 1);
    CHECK(b.at(1, 0) == -1);
    CHECK(b.at(1, 1) == 1);
}

TEST_CASE("orthogonalize fixes orthonormal matrices") {
    CHECK(orthogonalize(RationalMatrix::identity(4)) == RationalMatrix::identity(4));
    std::vector<std::vector<int>> perms{{0, 1, 2}, {1, 0, 2}, {2, 0, 1}, {1, 2, 0},
                                        {0, 2, 1}, {2, 1, 0}};
    for (const auto& p : perms) {
        const auto mat = permutation_matrix(p);
        CHECK(orthogonalize(mat) == mat);
    }
}

TEST_CASE("orthogonalize output rows are pairwise orthogonal") {
    std::mt19937_64 eng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(eng() % 4);
        RationalMatrix a(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) a.at(r, c) = static_cast<long>(eng() % 19) - 9;
        const auto b = orthogonalize(a);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) CHECK(dot_rows(b, i, j) == 0);
    }
}

TEST_CASE("determinant basics") {
    RationalMatrix a(3, 3);
    a.at(0, 0) = 2; a.at(0, 1) = 0; a.at(0, 2) = 1;
    a.at(1, 0) = 1; a.at(1, 1) = 1; a.at(1, 2) = 0;
    a.at(2, 0) = 0; a.at(2, 1) = 3; a.at(2, 2) = 1;
    CHECK(determinant(a) == 5);
    CHECK(determinant(RationalMatrix::identity(5)) == 1);
    RationalMatrix sing(2, 2);
    sing.at(0, 0) = 1; sing.at(0, 1) = 2;
    sing.at(1, 0) = 2; sing.at(1, 1) = 4;
    CHECK(determinant(sing) == 0);
}

TEST_CASE("all_minors_nonzero") {
    RationalMatrix good(2, 2);
    good.at(0, 0) = 1; good.at(0, 1) = 1;
    good.at(1, 0) = -1; good.at(1, 1) = 1;
    CHECK(all_minors_nonzero(good));
    // the identity has zero off-diagonal 1x1 minors
    CHECK_FALSE(all_minors_nonzero(RationalMatrix::identity(2)));
}

TEST_CASE("matrix_rank agrees with plain Gaussian elimination") {
    std::mt19937_64 eng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int rows = 1 + static_cast<int>(eng() % 6);
        const int cols = 1 + static_cast<int>(eng() % 6);
        std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rows));
        for (auto& row : m) {
            row.resize(static_cast<std::size_t>(cols));
            for (auto& x : row) {
                const long num = static_cast<long>(eng() % 11) - 5;
                const long den = 1 + static_cast<long>(eng() % 4);
                x = make_rational(num, den);
            }
        }
        // duplicate a row now and then to force rank deficiency
        if (rows >= 2 && trial % 3 == 0) m[0] = m[static_cast<std::size_t>(rows - 1)];
        CHECK(matrix_rank(m) == rank_reference(m));
    }
    CHECK(matrix_rank({}) == 0);
    CHECK(matrix_rank({{Rational(0), Rational(0)}}) == 0);
}

TEST_SUITE_END();
