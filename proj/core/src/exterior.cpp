#include "wsat/exterior.hpp"

#include <random>

namespace wsat {

ExtElement ExtElement::basis(const Mask& s, int universe_size) {
    ExtElement e{universe_size, {}};
    e.terms.emplace(s, 1);
    return e;
}

void ExtElement::add_term(const Mask& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rational ExtElement::coeff(const Mask& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Rational(0) : it->second;
}

std::vector<Mask> ExtElement::support() const {
    std::vector<Mask> out;
    out.reserve(terms.size());
    for (const auto& [m, c] : terms) out.push_back(m);
    return out;
}

namespace {

void check_same_universe(const ExtElement& x, const ExtElement& y, const char* op) {
    if (x.universe_size != y.universe_size)
        throw InvalidInput(std::string(op) + ": universe mismatch");
}

} // namespace

ExtElement ExtElement::operator+(const ExtElement& o) const {
    check_same_universe(*this, o, "operator+");
    ExtElement out = *this;
    for (const auto& [m, c] : o.terms) out.add_term(m, c);
    return out;
}

ExtElement ExtElement::operator-(const ExtElement& o) const {
    check_same_universe(*this, o, "operator-");
    ExtElement out = *this;
    for (const auto& [m, c] : o.terms) out.add_term(m, -c);
    return out;
}

ExtElement ExtElement::scaled(const Rational& c) const {
    ExtElement out = zero(universe_size);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms) out.terms.emplace(m, coeff * c);
    return out;
}

ExtElement wedge(const ExtElement& x, const ExtElement& y) {
    check_same_universe(x, y, "wedge");
    ExtElement out = ExtElement::zero(x.universe_size);
    for (const auto& [s, a] : x.terms)
        for (const auto& [t, b] : y.terms) {
            if (s.intersects(t)) continue;
            out.add_term(s | t, a * b * sign_of(s, t));
        }
    return out;
}

Rational inner(const ExtElement& x, const ExtElement& y) {
    check_same_universe(x, y, "inner");
    Rational acc = 0;
    // walk the smaller map
    const ExtElement& small = x.terms.size() <= y.terms.size() ? x : y;
    const ExtElement& large = x.terms.size() <= y.terms.size() ? y : x;
    for (const auto& [m, a] : small.terms) {
        auto it = large.terms.find(m);
        if (it != large.terms.end()) acc += a * it->second;
    }
    return acc;
}

ExtElement interior(const ExtElement& x, const ExtElement& y) {
    check_same_universe(x, y, "interior");
    ExtElement out = ExtElement::zero(x.universe_size);
    for (const auto& [t, a] : x.terms)
        for (const auto& [s, b] : y.terms) {
            if (!t.subset_of(s)) continue;
            const Mask rest = s.minus(t);
            out.add_term(rest, a * b * sign_of(rest, t));
        }
    return out;
}

int sign_decompose_exponent(const ParamVec& r, const ParamVec& s, const ParamVec& m,
                            const std::vector<std::vector<int>>& T) {
    const std::size_t d = r.size();
    if (s.size() != d || m.size() != d || T.size() != d)
        throw InvalidInput("sign_decompose_exponent: dimension mismatch");
    for (std::size_t i = 0; i < d; ++i)
        if (!(r[i] >= s[i] && s[i] >= m[i]))
            throw InvalidInput("sign_decompose_exponent: requires r_i >= s_i >= m_i");
    // The cross-color sums run over ordered pairs j > i only: that is what
    // the color-split sign of the interior product produces, and the ordered
    // form is what cancels between q_1 and q_3 when the contraction is
    // compared across patterns r.
    long q1 = 0, q2 = 0, q3 = 0, suffix = 0;
    for (std::size_t i = d; i-- > 0;) {
        long tail = 0; // |T_i \ [m_i - 1]|, i.e. entries at 0-based position >= m_i - 1
        for (int x : T[i]) {
            if (x < 0) throw InvalidInput("sign_decompose_exponent: negative index");
            if (x >= m[i] - 1) ++tail;
        }
        if (static_cast<int>(T[i].size()) != m[i])
            throw InvalidInput("sign_decompose_exponent: |T_i| must equal m_i");
        q1 += static_cast<long>(r[i]) * suffix;
        q2 += static_cast<long>(r[i]) * tail;
        q3 -= static_cast<long>(s[i]) * (tail + suffix);
        suffix += s[i];
    }
    return static_cast<int>(((q1 + q2 + q3) % 2 + 2) % 2);
}

int ColorfulBasis::universe_size() const {
    int total = 0;
    for (int ni : sizes) total += ni;
    return total;
}

namespace {

RationalMatrix sample_block(int m, std::mt19937_64& eng) {
    RationalMatrix A(m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            A.at(r, c) = static_cast<long>(1 + eng() % 10000);
    return A;
}

bool has_zero_row(const RationalMatrix& A) {
    for (int r = 0; r < A.rows; ++r) {
        bool zero = true;
        for (int c = 0; c < A.cols; ++c)
            if (A.at(r, c) != 0) {
                zero = false;
                break;
            }
        if (zero) return true;
    }
    return false;
}

RationalMatrix generic_block_from(int m, std::mt19937_64& eng, int block_cap, int max_attempts) {
    if (m < 1) throw InvalidInput("generic_block: size must be positive");
    if (m > block_cap)
        throw InvalidInput("generic_block: size " + std::to_string(m) +
                           " exceeds the minor-verification cap " + std::to_string(block_cap));
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        RationalMatrix B = orthogonalize(sample_block(m, eng));
        make_rows_primitive(B);
        if (has_zero_row(B)) continue;
        if (all_minors_nonzero(B)) return B;
    }
    throw InternalError("generic_block: sampling exhausted without a verified matrix");
}

} // namespace

RationalMatrix generic_block(int m, std::uint64_t seed, int block_cap, int max_attempts) {
    std::mt19937_64 eng(seed);
    return generic_block_from(m, eng, block_cap, max_attempts);
}

ColorfulBasis colorful_generic_basis(const ParamVec& n, std::uint64_t seed, int block_cap) {
    check_param_vec(n, -1, "n");
    ColorfulBasis basis;
    basis.sizes = n;
    basis.seed = seed;
    std::mt19937_64 eng(seed); // one stream across blocks
    for (int ni : n) {
        if (ni == 0) {
            basis.blocks.emplace_back(0, 0);
            continue;
        }
        basis.blocks.push_back(generic_block_from(ni, eng, block_cap, 256));
    }
    basis.verified_minors = true;
    return basis;
}

ExtElement f_vertex(const ColorfulBasis& basis, int color, int index) {
    if (color < 0 || color >= basis.dim()) throw InvalidInput("f_vertex: color out of range");
    const auto& block = basis.blocks[static_cast<std::size_t>(color)];
    if (index < 0 || index >= block.rows) throw InvalidInput("f_vertex: index out of range");
    int offset = 0;
    for (int i = 0; i < color; ++i) offset += basis.sizes[static_cast<std::size_t>(i)];
    ExtElement out = ExtElement::zero(basis.universe_size());
    for (int c = 0; c < block.cols; ++c)
        out.add_term(Mask::single(offset + c), block.at(index, c));
    return out;
}

ExtElement f_subset_vector(const ColorfulBasis& basis, const Mask& s) {
    const int total = basis.universe_size();
    if (!s.subset_of(Mask::range(0, total)))
        throw InvalidInput("f_subset_vector: mask outside universe");
    ExtElement acc = ExtElement::basis(Mask{}, total);
    // ascending vertex order; offsets identify the color of each bit
    std::vector<int> class_end;
    int run = 0;
    for (int ni : basis.sizes) class_end.push_back(run += ni);
    s.for_each_bit([&](int pos) {
        int color = 0;
        while (pos >= class_end[static_cast<std::size_t>(color)]) ++color;
        const int start = class_end[static_cast<std::size_t>(color)] -
                          basis.sizes[static_cast<std::size_t>(color)];
        acc = wedge(acc, f_vertex(basis, color, pos - start));
    });
    return acc;
}

} // namespace wsat
