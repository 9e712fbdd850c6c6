#pragma once

#include "gcomp/vertex_set.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gcomp {

using Edge = std::pair<Vertex, Vertex>;

/// Rejection of malformed graph input. Carries the offending pair when there is one.
class graph_error : public std::invalid_argument {
public:
    explicit graph_error(const std::string& msg) : std::invalid_argument(msg) {}
    graph_error(const std::string& msg, Edge offending)
        : std::invalid_argument(msg + " (" + std::to_string(offending.first) + "," +
                                std::to_string(offending.second) + ")"),
          edge_(offending),
          has_edge_(true) {}

    bool has_edge() const { return has_edge_; }
    Edge edge() const { return edge_; }

private:
    Edge edge_{};
    bool has_edge_ = false;
};

/**
 * Labelled simple undirected graph on vertices 0..n-1, n <= 64.
 *
 * Immutable once built; every constructor path goes through build_graph's validation.
 */
class Graph {
public:
    Graph() = default;

    Vertex num_vertices() const { return static_cast<Vertex>(adjacency_.size()); }
    std::size_t num_edges() const { return num_edges_; }

    VertexSet vertices() const { return VertexSet::first_n(num_vertices()); }
    VertexSet neighbors(Vertex v) const { return adjacency_.at(v); }
    unsigned degree(Vertex v) const { return neighbors(v).size(); }
    bool has_edge(Vertex u, Vertex v) const { return u < num_vertices() && neighbors(u).contains(v); }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(num_edges_);
        for (Vertex u = 0; u < num_vertices(); ++u)
            for (auto v : adjacency_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Union of neighborhoods of the members of s.
    VertexSet neighborhood(VertexSet s) const {
        VertexSet out;
        for (auto v : s) out |= adjacency_[v];
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

    friend Graph build_graph(Vertex num_vertices, std::span<const Edge> edges);

private:
    std::vector<VertexSet> adjacency_;
    std::size_t num_edges_ = 0;
};

/// Validates and builds a graph. Rejects self-loops, duplicate edges (either orientation) and
/// out-of-range endpoints.
inline Graph build_graph(Vertex num_vertices, std::span<const Edge> edges) {
    if (num_vertices > kMaxVertices)
        throw graph_error("graph has " + std::to_string(num_vertices) + " vertices; at most 64 are supported");
    Graph g;
    g.adjacency_.assign(num_vertices, VertexSet{});
    for (auto [u, v] : edges) {
        if (u >= num_vertices || v >= num_vertices) throw graph_error("edge endpoint out of range", {u, v});
        if (u == v) throw graph_error("self-loop", {u, v});
        if (g.adjacency_[u].contains(v)) throw graph_error("duplicate edge", {u, v});
        g.adjacency_[u].insert(v);
        g.adjacency_[v].insert(u);
        ++g.num_edges_;
    }
    return g;
}

inline Graph build_graph(Vertex num_vertices, std::initializer_list<Edge> edges) {
    return build_graph(num_vertices, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph build_graph(Vertex num_vertices, const std::vector<Edge>& edges) {
    return build_graph(num_vertices, std::span<const Edge>(edges));
}

/// Vertices of `s` reachable from `start` without leaving `s`.
inline VertexSet reach_within(const Graph& g, VertexSet s, Vertex start) {
    VertexSet seen = VertexSet::singleton(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next = (g.neighborhood(frontier) & s) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// True iff the subgraph induced by `s` is connected. `s` must be a nonempty subset of V(g).
inline bool is_connected_induced(const Graph& g, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("is_connected_induced: empty vertex set");
    if (!s.is_subset_of(g.vertices())) throw std::invalid_argument("is_connected_induced: set not within V(g)");
    return reach_within(g, s, s.min()) == s;
}

/// Whole-graph connectivity; the empty graph counts as connected.
inline bool is_connected(const Graph& g) {
    return g.num_vertices() == 0 || is_connected_induced(g, g.vertices());
}

// ---------------------------------------------------------------------------
// Surgery

inline Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
    auto kept = g.edges();
    for (auto [u, v] : removed) {
        Edge key = u < v ? Edge{u, v} : Edge{v, u};
        auto it = std::find(kept.begin(), kept.end(), key);
        if (it == kept.end()) throw graph_error("edge not present", {u, v});
        kept.erase(it);
    }
    return build_graph(g.num_vertices(), kept);
}

inline Graph delete_edges(const Graph& g, std::initializer_list<Edge> removed) {
    return delete_edges(g, std::span<const Edge>(removed.begin(), removed.size()));
}

inline Graph add_edge(const Graph& g, Edge e) {
    auto es = g.edges();
    es.push_back(e);
    return build_graph(g.num_vertices(), es);
}

/// Relabels vertex v as perm[v]. `perm` must be a permutation of 0..n-1.
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.num_vertices()) throw std::invalid_argument("relabel: permutation size mismatch");
    VertexSet image;
    for (auto p : perm) {
        if (p >= g.num_vertices() || image.contains(p)) throw std::invalid_argument("relabel: not a permutation");
        image.insert(p);
    }
    std::vector<Edge> es;
    for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
    return build_graph(g.num_vertices(), es);
}

/// g1 followed by g2, with g2's vertices shifted by |V(g1)|.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const Vertex shift = g1.num_vertices();
    auto es = g1.edges();
    for (auto [u, v] : g2.edges()) es.emplace_back(u + shift, v + shift);
    return build_graph(shift + g2.num_vertices(), es);
}

/**
 * Identifies v1 of g1 with v2 of g2. The result keeps g1's labels; g2's other vertices follow
 * in their original order.
 */
inline Graph join_at_vertex(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
    if (v1 >= g1.num_vertices()) throw graph_error("join_at_vertex: vertex out of range in first graph");
    if (v2 >= g2.num_vertices()) throw graph_error("join_at_vertex: vertex out of range in second graph");
    const Vertex shift = g1.num_vertices();
    auto map2 = [&](Vertex x) -> Vertex {
        if (x == v2) return v1;
        return shift + (x < v2 ? x : x - 1);
    };
    auto es = g1.edges();
    for (auto [u, v] : g2.edges()) es.emplace_back(map2(u), map2(v));
    return build_graph(shift + g2.num_vertices() - 1, es);
}

/// Disjoint union plus the single edge joining v1 to (shifted) v2.
inline Graph join_by_bridge(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
    if (v1 >= g1.num_vertices()) throw graph_error("join_by_bridge: vertex out of range in first graph");
    if (v2 >= g2.num_vertices()) throw graph_error("join_by_bridge: vertex out of range in second graph");
    return add_edge(disjoint_union(g1, g2), {v1, g1.num_vertices() + v2});
}

}  // namespace gcomp
