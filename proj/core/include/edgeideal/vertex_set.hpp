#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <vector>

namespace edgeideal {

/// Hard upper bound on vertices per graph or ground set.
inline constexpr int kMaxVertices = 64;

/// A set of vertex indices packed into one machine word. Bit v is vertex v.
/// Integer order on the packed word is colexicographic order on the sets.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }
    static constexpr VertexSet range(int n) {
        return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }
    static VertexSet of(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr bool contains(VertexSet other) const { return (other.bits_ & ~bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
    constexpr int min() const { return std::countr_zero(bits_); }
    constexpr int max() const { return 63 - std::countl_zero(bits_); }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet{bits_ | o.bits_}; }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet{bits_ & o.bits_}; }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet{bits_ & ~o.bits_}; }
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet{bits_ ^ o.bits_}; }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;
    /// Colex order.
    constexpr auto operator<=>(const VertexSet&) const = default;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const { return iterator{bits_}; }
    constexpr iterator end() const { return iterator{0}; }

    std::vector<int> to_vector() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on sorted index tuples ({0,1} < {0,2} < {1}).
constexpr bool lex_less(VertexSet a, VertexSet b) {
    if (a == b) return false;
    const VertexSet diff = a ^ b;
    const int low = diff.min();
    const VertexSet above = VertexSet{~((std::uint64_t{2} << low) - 1)};
    const bool a_has = a.contains(low);
    const VertexSet other = a_has ? b : a;
    // the set lacking `low` is a prefix of the other when it has nothing beyond `low`
    if ((other & above).empty()) return !a_has;
    return a_has;
}

/// Size first, then lexicographic.
constexpr bool size_lex_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

/// Renumbers the members of `s` that lie in `keep` to consecutive indices,
/// preserving order (the i-th member of `keep` becomes index i).
inline VertexSet compress(VertexSet s, VertexSet keep) {
    VertexSet out;
    int pos = 0;
    for (int v : keep) {
        if (s.contains(v)) out.insert(pos);
        ++pos;
    }
    return out;
}

/// Inverse of compress: index i maps to the i-th member of `keep`.
inline VertexSet expand(VertexSet s, VertexSet keep) {
    VertexSet out;
    int pos = 0;
    for (int v : keep) {
        if (s.contains(pos)) out.insert(v);
        ++pos;
    }
    return out;
}

}  // namespace edgeideal
