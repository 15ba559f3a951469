#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "wsat/errors.hpp"

#ifndef WSAT_MASK_WORDS
#define WSAT_MASK_WORDS 1
#endif

namespace wsat {

/// Vertex subset packed into machine words. Bit positions follow the
/// color-contiguous vertex order, so numeric comparison of masks doubles as
/// the canonical edge order used everywhere. The default build holds one
/// word (64 vertices); configure WSAT_MASK_WORDS at CMake level for wider
/// universes.
struct Mask {
    static constexpr int kWords = WSAT_MASK_WORDS;
    static constexpr int kCapacity = 64 * kWords;

    std::array<std::uint64_t, kWords> w{};

    static Mask single(int pos) {
        Mask m;
        m.set(pos);
        return m;
    }

    /// Bits [first, first + count).
    static Mask range(int first, int count) {
        Mask m;
        for (int p = first; p < first + count; ++p) m.set(p);
        return m;
    }

    bool test(int pos) const { return (w[pos >> 6] >> (pos & 63)) & 1u; }
    void set(int pos) { w[pos >> 6] |= std::uint64_t{1} << (pos & 63); }
    void reset(int pos) { w[pos >> 6] &= ~(std::uint64_t{1} << (pos & 63)); }

    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }

    /// Lowest set bit, -1 when empty.
    int lowest() const {
        for (int i = 0; i < kWords; ++i)
            if (w[i]) return i * 64 + std::countr_zero(w[i]);
        return -1;
    }

    Mask operator|(const Mask& o) const {
        Mask m;
        for (int i = 0; i < kWords; ++i) m.w[i] = w[i] | o.w[i];
        return m;
    }
    Mask operator&(const Mask& o) const {
        Mask m;
        for (int i = 0; i < kWords; ++i) m.w[i] = w[i] & o.w[i];
        return m;
    }
    /// Set difference.
    Mask minus(const Mask& o) const {
        Mask m;
        for (int i = 0; i < kWords; ++i) m.w[i] = w[i] & ~o.w[i];
        return m;
    }

    bool subset_of(const Mask& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    bool intersects(const Mask& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }

    bool operator==(const Mask&) const = default;

    /// Numeric order, most significant word first.
    bool operator<(const Mask& o) const {
        for (int i = kWords - 1; i >= 0; --i)
            if (w[i] != o.w[i]) return w[i] < o.w[i];
        return false;
    }

    template <typename F>
    void for_each_bit(F&& f) const {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t x = w[i];
            while (x) {
                f(i * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    std::vector<int> bits() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each_bit([&](int b) { out.push_back(b); });
        return out;
    }
};

/// Number of set bits of `m` strictly above position `pos`.
inline int count_above(const Mask& m, int pos) {
    int c = 0;
    int word = pos >> 6, bit = pos & 63;
    if (bit < 63) c += std::popcount(m.w[word] & ~((std::uint64_t{2} << bit) - 1));
    for (int i = word + 1; i < Mask::kWords; ++i) c += std::popcount(m.w[i]);
    return c;
}

/// inv(S, T) = |{(s, t) in S x T : s > t}|.
inline int inv_count(const Mask& s, const Mask& t) {
    int inv = 0;
    t.for_each_bit([&](int b) { inv += count_above(s, b); });
    return inv;
}

/// sgn(S, T) = (-1)^inv(S, T).
inline int sign_of(const Mask& s, const Mask& t) { return (inv_count(s, t) & 1) ? -1 : 1; }

/// Visit every k-element submask of `pool` in increasing lexicographic order
/// of the sorted bit-position lists. The callback returns true to abort; the
/// function returns true when aborted.
template <typename F>
bool for_each_subset(const Mask& pool, int k, F&& f) {
    if (k < 0) return false;
    std::vector<int> pos = pool.bits();
    const int n = static_cast<int>(pos.size());
    if (k > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Mask sub;
        for (int i : idx) sub.set(pos[static_cast<std::size_t>(i)]);
        if (f(sub)) return true;
        // advance the combination
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace wsat
