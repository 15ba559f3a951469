#include "wsat/linalg.hpp"

#include <algorithm>

namespace wsat {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Rational dot_rows(const RationalMatrix& m, int i, int j) {
    Rational acc = 0;
    for (int c = 0; c < m.cols; ++c) acc += m.at(i, c) * m.at(j, c);
    return acc;
}

RationalMatrix orthogonalize(const RationalMatrix& A) {
    if (A.rows != A.cols) throw InvalidInput("orthogonalize: matrix must be square");
    RationalMatrix B = A;
    for (int i = 0; i < B.rows; ++i)
        for (int j = 0; j < i; ++j) {
            const Rational jj = dot_rows(B, j, j);
            const Rational ij = dot_rows(B, i, j);
            for (int c = 0; c < B.cols; ++c) B.at(i, c) = jj * B.at(i, c) - ij * B.at(j, c);
        }
    return B;
}

namespace {

// primitive integer form of one rational row; all-zero rows stay zero
void make_row_primitive(Rational* row, int cols) {
    mpz_class scale = 1; // lcm of denominators
    for (int c = 0; c < cols; ++c) {
        mpz_class den = row[c].get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
        scale = scale / g * den;
    }
    mpz_class content = 0;
    std::vector<mpz_class> nums(static_cast<std::size_t>(cols));
    for (int c = 0; c < cols; ++c) {
        nums[static_cast<std::size_t>(c)] = row[c].get_num() * (scale / row[c].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                nums[static_cast<std::size_t>(c)].get_mpz_t());
    }
    if (content == 0) return;
    for (int c = 0; c < cols; ++c) {
        row[c] = Rational(nums[static_cast<std::size_t>(c)] / content);
    }
}

} // namespace

void make_rows_primitive(RationalMatrix& A) {
    for (int r = 0; r < A.rows; ++r) make_row_primitive(&A.at(r, 0), A.cols);
}

Rational determinant(const RationalMatrix& A) {
    if (A.rows != A.cols) throw InvalidInput("determinant: matrix must be square");
    RationalMatrix M = A;
    Rational det = 1;
    for (int col = 0; col < M.cols; ++col) {
        int pivot = -1;
        for (int r = col; r < M.rows; ++r)
            if (M.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int c = 0; c < M.cols; ++c) std::swap(M.at(pivot, c), M.at(col, c));
            det = -det;
        }
        det *= M.at(col, col);
        for (int r = col + 1; r < M.rows; ++r) {
            if (M.at(r, col) == 0) continue;
            const Rational factor = M.at(r, col) / M.at(col, col);
            for (int c = col; c < M.cols; ++c) M.at(r, c) -= factor * M.at(col, c);
        }
    }
    return det;
}

bool all_minors_nonzero(const RationalMatrix& A) {
    if (A.rows != A.cols) throw InvalidInput("all_minors_nonzero: matrix must be square");
    const int n = A.rows;
    std::vector<int> rows, cols;
    // iterate over all same-size index subsets
    for (int k = 1; k <= n; ++k) {
        std::vector<int> ri(static_cast<std::size_t>(k)), ci(static_cast<std::size_t>(k));
        auto first = [&](std::vector<int>& v) {
            for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = i;
        };
        auto advance = [&](std::vector<int>& v) {
            int i = k - 1;
            while (i >= 0 && v[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) return false;
            ++v[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        };
        first(ri);
        do {
            first(ci);
            do {
                RationalMatrix sub(k, k);
                for (int r = 0; r < k; ++r)
                    for (int c = 0; c < k; ++c)
                        sub.at(r, c) = A.at(ri[static_cast<std::size_t>(r)],
                                            ci[static_cast<std::size_t>(c)]);
                if (determinant(sub) == 0) return false;
            } while (advance(ci));
        } while (advance(ri));
    }
    return true;
}

int matrix_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    for (auto& row : m) {
        if (row.size() != cols) throw InvalidInput("matrix_rank: ragged rows");
        make_row_primitive(row.data(), static_cast<int>(cols));
    }
    // integer elimination; every row stays primitive to tame growth
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<std::size_t>(r)][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
        const auto& prow = m[static_cast<std::size_t>(rank)];
        for (int r = rank + 1; r < rows; ++r) {
            auto& row = m[static_cast<std::size_t>(r)];
            if (row[col] == 0) continue;
            const Rational p = prow[col], q = row[col];
            for (std::size_t c = col; c < cols; ++c) row[c] = p * row[c] - q * prow[c];
            make_row_primitive(row.data(), static_cast<int>(cols));
        }
        ++rank;
    }
    return rank;
}

} // namespace wsat
