#pragma once

#include "gcomp/bigint.hpp"
#include "gcomp/graph.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace gcomp {

/// A requested computation exceeds the size an exact oracle supports.
class oracle_cap_error : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Partition of V(G) into connected blocks, blocks ordered by their minimum vertex.
struct Composition {
    std::vector<VertexSet> blocks;

    std::size_t size() const { return blocks.size(); }

    /// Block notation: "0,1|2|3,4".
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (i) out += '|';
            out += blocks[i].to_string();
        }
        return out;
    }

    friend bool operator==(const Composition&, const Composition&) = default;
};

/// True iff `c` is a composition of `g` in canonical form.
inline bool is_valid_composition(const Graph& g, const Composition& c) {
    VertexSet covered;
    Vertex prev_min = 0;
    for (std::size_t i = 0; i < c.blocks.size(); ++i) {
        const auto b = c.blocks[i];
        if (b.empty() || !(b & covered).empty() || !b.is_subset_of(g.vertices())) return false;
        if (!is_connected_induced(g, b)) return false;
        if (i > 0 && b.min() <= prev_min) return false;
        prev_min = b.min();
        covered |= b;
    }
    return covered == g.vertices();
}

struct CountResult {
    BigNat value;
    Vertex vertices = 0;
    std::size_t edges = 0;
};

namespace detail {

template <class F>
void expand_connected(const Graph& g, VertexSet allowed, VertexSet block, VertexSet excluded, F& f) {
    const VertexSet boundary = (g.neighborhood(block) & allowed) - block - excluded;
    if (boundary.empty()) {
        f(block);
        return;
    }
    const Vertex v = boundary.min();
    expand_connected(g, allowed, block, excluded | VertexSet::singleton(v), f);
    expand_connected(g, allowed, block | VertexSet::singleton(v), excluded, f);
}

}  // namespace detail

/**
 * Calls f(S) once for every S with anchor in S, S a subset of `allowed`, S inducing a connected
 * subgraph.
 *
 * The block grows by its least boundary vertex; each step branches on leaving that vertex out
 * (it joins the exclusion set) or taking it in, so no set is produced twice. Order: the
 * exclusion branch first, so {anchor} comes out first and the largest set last.
 */
template <class F>
void for_each_connected_subset(const Graph& g, VertexSet allowed, Vertex anchor, F&& f) {
    if (!allowed.contains(anchor)) throw std::invalid_argument("anchor vertex is not in the allowed set");
    if (!allowed.is_subset_of(g.vertices())) throw std::invalid_argument("allowed set is not within V(g)");
    detail::expand_connected(g, allowed, VertexSet::singleton(anchor), VertexSet{}, f);
}

inline std::vector<VertexSet> connected_subsets_containing(const Graph& g, VertexSet allowed, Vertex anchor) {
    std::vector<VertexSet> out;
    for_each_connected_subset(g, allowed, anchor, [&](VertexSet s) { out.push_back(s); });
    return out;
}

namespace detail {

template <class F>
void enumerate_rest(const Graph& g, VertexSet rest, Composition& partial, F& f) {
    if (rest.empty()) {
        f(static_cast<const Composition&>(partial));
        return;
    }
    for_each_connected_subset(g, rest, rest.min(), [&](VertexSet block) {
        partial.blocks.push_back(block);
        enumerate_rest(g, rest - block, partial, f);
        partial.blocks.pop_back();
    });
}

}  // namespace detail

/**
 * Streams every composition of g exactly once, in canonical form.
 *
 * The first block is the one containing vertex 0, chosen in for_each_connected_subset order;
 * the rest recurse on what remains. The empty graph yields one composition with no blocks.
 */
template <class F>
void for_each_composition(const Graph& g, F&& f) {
    Composition partial;
    detail::enumerate_rest(g, g.vertices(), partial, f);
}

inline std::vector<Composition> enumerate_compositions(const Graph& g) {
    std::vector<Composition> out;
    for_each_composition(g, [&](const Composition& c) { out.push_back(c); });
    return out;
}

/**
 * C(G) by memoized recursion over the unassigned vertex set R:
 *
 *     count(R) = sum over connected S, min(R) in S, S within R, of count(R \ S),   count({}) = 1.
 *
 * The memo lives for one call.
 */
class CompositionCounter {
public:
    explicit CompositionCounter(const Graph& g) : g_(g) {}

    BigNat count() { return count(g_.vertices()); }

    BigNat count(VertexSet rest) {
        if (rest.empty()) return 1;
        if (auto it = memo_.find(rest); it != memo_.end()) return it->second;
        BigNat total = 0;
        for_each_connected_subset(g_, rest, rest.min(), [&](VertexSet block) { total += count(rest - block); });
        memo_.emplace(rest, total);
        return total;
    }

    std::size_t memo_size() const { return memo_.size(); }

private:
    const Graph& g_;
    std::unordered_map<VertexSet, BigNat> memo_;
};

inline CountResult count_compositions(const Graph& g) {
    if (g.num_vertices() > kMaxVertices) throw oracle_cap_error("graph exceeds the 64-vertex oracle cap");
    CompositionCounter counter(g);
    return {counter.count(), g.num_vertices(), g.num_edges()};
}

}  // namespace gcomp
