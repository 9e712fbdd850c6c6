#pragma once

#include "gcomp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace gcomp {

using Rng = std::mt19937_64;

/// G(n, p): each of the n(n-1)/2 pairs is an edge with probability p.
inline Graph random_graph(Rng& rng, Vertex n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) es.emplace_back(u, v);
    return build_graph(n, es);
}

/// A random recursive tree on 0..n-1 with every other pair added with probability p.
inline Graph random_connected_graph(Rng& rng, Vertex n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (Vertex v = 1; v < n; ++v) es.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            bool present = std::find(es.begin(), es.end(), Edge{u, v}) != es.end();
            if (!present && coin(rng)) es.emplace_back(u, v);
        }
    return build_graph(n, es);
}

inline std::vector<Vertex> random_permutation(Rng& rng, Vertex n) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace gcomp
