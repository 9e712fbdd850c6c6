#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcomp {

using Vertex = unsigned;

/// Largest vertex count a VertexSet (and therefore a Graph) can address.
inline constexpr Vertex kMaxVertices = 64;

/**
 * A subset of {0, ..., 63} stored as a single machine word.
 *
 * Iteration visits members in ascending order.
 */
class VertexSet {
public:
    using word_type = std::uint64_t;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        constexpr iterator() = default;
        constexpr explicit iterator(word_type rest) : rest_(rest) {}

        constexpr Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest_)); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        word_type rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(word_type bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs) {
        for (auto v : vs) insert(v);
    }

    /// {0, ..., n-1}
    static constexpr VertexSet first_n(Vertex n) {
        if (n > kMaxVertices) throw std::out_of_range("VertexSet::first_n: n exceeds 64");
        return VertexSet(n == kMaxVertices ? ~word_type{0} : (word_type{1} << n) - 1);
    }
    static constexpr VertexSet singleton(Vertex v) {
        check(v);
        return VertexSet(word_type{1} << v);
    }

    constexpr word_type bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
    constexpr bool contains(Vertex v) const { return v < kMaxVertices && ((bits_ >> v) & 1U) != 0; }

    /// Smallest member; the set must be nonempty.
    constexpr Vertex min() const {
        if (bits_ == 0) throw std::logic_error("VertexSet::min on empty set");
        return static_cast<Vertex>(std::countr_zero(bits_));
    }

    constexpr void insert(Vertex v) {
        check(v);
        bits_ |= word_type{1} << v;
    }
    constexpr void erase(Vertex v) {
        check(v);
        bits_ &= ~(word_type{1} << v);
    }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    /// Members ascending, comma separated: "0,2,5".
    std::string to_string() const {
        std::string out;
        for (auto v : *this) {
            if (!out.empty()) out += ',';
            out += std::to_string(v);
        }
        return out;
    }

    /// Calls f(sub) for every subset of *this, including the empty set and *this itself.
    template <class F>
    void for_each_subset(F&& f) const {
        word_type sub = bits_;
        while (true) {
            f(VertexSet(sub));
            if (sub == 0) break;
            sub = (sub - 1) & bits_;
        }
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    /// Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator&=(VertexSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator-=(VertexSet o) {
        bits_ &= ~o.bits_;
        return *this;
    }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

private:
    static constexpr void check(Vertex v) {
        if (v >= kMaxVertices) throw std::out_of_range("vertex index " + std::to_string(v) + " exceeds 63");
    }

    word_type bits_ = 0;
};

}  // namespace gcomp

template <>
struct std::hash<gcomp::VertexSet> {
    std::size_t operator()(gcomp::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
