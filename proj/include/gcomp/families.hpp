#pragma once

#include "gcomp/graph.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gcomp {

enum class FamilyKind {
    Path,
    Cycle,
    Complete,
    CompleteMinusEdge,
    Star,
    Tree,
    Wheel,
    Ladder,
    CompleteBipartite,
    Petersen,
};

inline std::string_view family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::Path: return "path";
        case FamilyKind::Cycle: return "cycle";
        case FamilyKind::Complete: return "complete";
        case FamilyKind::CompleteMinusEdge: return "complete-minus-edge";
        case FamilyKind::Star: return "star";
        case FamilyKind::Tree: return "tree";
        case FamilyKind::Wheel: return "wheel";
        case FamilyKind::Ladder: return "ladder";
        case FamilyKind::CompleteBipartite: return "kmn";
        case FamilyKind::Petersen: return "petersen";
    }
    return "?";
}

inline std::optional<FamilyKind> parse_family_name(std::string_view name) {
    for (auto k : {FamilyKind::Path, FamilyKind::Cycle, FamilyKind::Complete, FamilyKind::CompleteMinusEdge,
                   FamilyKind::Star, FamilyKind::Tree, FamilyKind::Wheel, FamilyKind::Ladder,
                   FamilyKind::CompleteBipartite, FamilyKind::Petersen})
        if (family_name(k) == name) return k;
    return std::nullopt;
}

/**
 * A member of one of the named graph families.
 *
 * Vertex numbering produced by build_family:
 *   path(n)               i -- i+1
 *   cycle(n)              i -- (i+1) mod n, n >= 3
 *   complete(n)           all pairs
 *   complete_minus_edge   K_n without (0,1), n >= 2
 *   star(n)               center 0, leaves 1..n-1
 *   tree(parents)         vertex i (i >= 1) hangs from parents[i-1] < i
 *   wheel(n)              outer cycle on 0..n-2, hub n-1; W_1 one vertex, W_2 = P_2, W_3 = C_3
 *   ladder(n)             rung k is (2k, 2k+1); rails 2k -- 2k+2 and 2k+1 -- 2k+3
 *   bipartite(m, n)       parts {0..m-1} and {m..m+n-1}
 *   petersen()            outer 0-4 cycle, inner i+5 -- ((i+2) mod 5)+5, spokes i -- i+5
 */
struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    Vertex n = 0;
    Vertex m = 0;  // first part size, CompleteBipartite only
    std::vector<Vertex> parents;  // Tree only

    static FamilySpec of(FamilyKind kind, Vertex n, Vertex m = 0) {
        FamilySpec s;
        s.kind = kind;
        s.n = n;
        s.m = m;
        return s;
    }
    static FamilySpec path(Vertex n) { return of(FamilyKind::Path, n); }
    static FamilySpec cycle(Vertex n) { return of(FamilyKind::Cycle, n); }
    static FamilySpec complete(Vertex n) { return of(FamilyKind::Complete, n); }
    static FamilySpec complete_minus_edge(Vertex n) { return of(FamilyKind::CompleteMinusEdge, n); }
    static FamilySpec star(Vertex n) { return of(FamilyKind::Star, n); }
    static FamilySpec tree(std::vector<Vertex> parents) {
        auto s = of(FamilyKind::Tree, static_cast<Vertex>(parents.size() + 1));
        s.parents = std::move(parents);
        return s;
    }
    static FamilySpec wheel(Vertex n) { return of(FamilyKind::Wheel, n); }
    static FamilySpec ladder(Vertex n) { return of(FamilyKind::Ladder, n); }
    static FamilySpec bipartite(Vertex m, Vertex n) { return of(FamilyKind::CompleteBipartite, n, m); }
    static FamilySpec petersen() { return of(FamilyKind::Petersen, 10); }

    /// Vertex count of the graph this spec describes.
    unsigned long long vertex_count() const {
        switch (kind) {
            case FamilyKind::Ladder: return 2ULL * n;
            case FamilyKind::CompleteBipartite: return 1ULL * m + n;
            case FamilyKind::Petersen: return 10;
            default: return n;
        }
    }
};

namespace detail {

inline void require(bool ok, const FamilySpec& spec, const char* what) {
    if (!ok)
        throw std::invalid_argument(std::string(family_name(spec.kind)) + ": " + what + " (n=" +
                                    std::to_string(spec.n) + ")");
}

}  // namespace detail

inline Graph build_family(const FamilySpec& spec) {
    using detail::require;
    if (spec.vertex_count() > kMaxVertices) throw graph_error("family member exceeds 64 vertices");
    const Vertex n = spec.n;
    std::vector<Edge> es;
    switch (spec.kind) {
        case FamilyKind::Path:
            for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
            return build_graph(n, es);
        case FamilyKind::Cycle:
            require(n >= 3, spec, "cycle needs at least 3 vertices");
            for (Vertex i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
            return build_graph(n, es);
        case FamilyKind::Complete:
            require(n >= 1, spec, "complete graph needs at least 1 vertex");
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
            return build_graph(n, es);
        case FamilyKind::CompleteMinusEdge:
            require(n >= 2, spec, "needs at least 2 vertices");
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (!(u == 0 && v == 1)) es.emplace_back(u, v);
            return build_graph(n, es);
        case FamilyKind::Star:
            require(n >= 1, spec, "star needs at least 1 vertex");
            for (Vertex i = 1; i < n; ++i) es.emplace_back(0, i);
            return build_graph(n, es);
        case FamilyKind::Tree:
            require(spec.parents.size() + 1 == n, spec, "parent list must have n-1 entries");
            for (Vertex i = 1; i < n; ++i) {
                require(spec.parents[i - 1] < i, spec, "parent of vertex i must be smaller than i");
                es.emplace_back(spec.parents[i - 1], i);
            }
            return build_graph(n, es);
        case FamilyKind::Wheel: {
            require(n >= 1, spec, "wheel needs at least 1 vertex");
            const Vertex hub = n - 1;
            const Vertex outer = n - 1;
            if (outer >= 3)
                for (Vertex i = 0; i < outer; ++i) es.emplace_back(i, (i + 1) % outer);
            else if (outer == 2)
                es.emplace_back(0, 1);
            for (Vertex i = 0; i < outer; ++i) es.emplace_back(i, hub);
            return build_graph(n, es);
        }
        case FamilyKind::Ladder:
            require(n >= 1, spec, "ladder needs at least 1 rung");
            for (Vertex k = 0; k < n; ++k) {
                es.emplace_back(2 * k, 2 * k + 1);
                if (k + 1 < n) {
                    es.emplace_back(2 * k, 2 * k + 2);
                    es.emplace_back(2 * k + 1, 2 * k + 3);
                }
            }
            return build_graph(2 * n, es);
        case FamilyKind::CompleteBipartite:
            for (Vertex a = 0; a < spec.m; ++a)
                for (Vertex b = 0; b < n; ++b) es.emplace_back(a, spec.m + b);
            return build_graph(spec.m + n, es);
        case FamilyKind::Petersen:
            for (Vertex i = 0; i < 5; ++i) {
                es.emplace_back(i, (i + 1) % 5);
                es.emplace_back(i + 5, (i + 2) % 5 + 5);
                es.emplace_back(i, i + 5);
            }
            return build_graph(10, es);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace gcomp
