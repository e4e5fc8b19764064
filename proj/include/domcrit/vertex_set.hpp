#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace domcrit {

// Hard capacity of the whole library: adjacency rows are two 64-bit words.
inline constexpr int kMaxVertices = 128;

/// Fixed-width set of vertex ids in [0, 128).
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet full(int n) {
        VertexSet s;
        if (n >= 64) {
            s.words_[0] = ~std::uint64_t{0};
            s.words_[1] = (n == 128) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n - 64)) - 1);
        } else if (n > 0) {
            s.words_[0] = (std::uint64_t{1} << n) - 1;
        }
        return s;
    }

    static constexpr VertexSet single(int v) {
        VertexSet s;
        s.set(v);
        return s;
    }

    constexpr bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

    constexpr VertexSet& set(int v) {
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
        return *this;
    }

    constexpr VertexSet& reset(int v) {
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        return *this;
    }

    constexpr int count() const {
        return std::popcount(words_[0]) + std::popcount(words_[1]);
    }

    constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }

    constexpr bool intersects(const VertexSet& o) const {
        return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
    }

    /// Superset test: every element of o is in *this.
    constexpr bool contains(const VertexSet& o) const {
        return (o.words_[0] & ~words_[0]) == 0 && (o.words_[1] & ~words_[1]) == 0;
    }

    /// Lowest set bit, or -1 when empty.
    constexpr int lowest() const {
        if (words_[0]) return std::countr_zero(words_[0]);
        if (words_[1]) return 64 + std::countr_zero(words_[1]);
        return -1;
    }

    constexpr VertexSet& operator&=(const VertexSet& o) {
        words_[0] &= o.words_[0];
        words_[1] &= o.words_[1];
        return *this;
    }

    constexpr VertexSet& operator|=(const VertexSet& o) {
        words_[0] |= o.words_[0];
        words_[1] |= o.words_[1];
        return *this;
    }

    /// Set difference.
    constexpr VertexSet& operator-=(const VertexSet& o) {
        words_[0] &= ~o.words_[0];
        words_[1] &= ~o.words_[1];
        return *this;
    }

    friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    constexpr bool operator==(const VertexSet&) const = default;

    /// Iterates set bits in increasing order.
    class const_iterator {
    public:
        constexpr const_iterator(std::uint64_t w0, std::uint64_t w1) : w0_(w0), w1_(w1) {}
        constexpr int operator*() const {
            return w0_ ? std::countr_zero(w0_) : 64 + std::countr_zero(w1_);
        }
        constexpr const_iterator& operator++() {
            if (w0_)
                w0_ &= w0_ - 1;
            else
                w1_ &= w1_ - 1;
            return *this;
        }
        constexpr bool operator!=(const const_iterator& o) const {
            return w0_ != o.w0_ || w1_ != o.w1_;
        }

    private:
        std::uint64_t w0_, w1_;
    };

    constexpr const_iterator begin() const { return {words_[0], words_[1]}; }
    constexpr const_iterator end() const { return {0, 0}; }

private:
    std::array<std::uint64_t, 2> words_{0, 0};
};

}  // namespace domcrit
