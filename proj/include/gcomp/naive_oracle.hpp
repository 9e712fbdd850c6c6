#pragma once

#include "gcomp/bigint.hpp"
#include "gcomp/composer.hpp"
#include "gcomp/graph.hpp"

#include <array>
#include <cstdint>

namespace gcomp {

/// Vertex limit for naive_count_via_set_partitions: B(12) = 4213597 partitions.
inline constexpr Vertex kNaiveOracleMaxVertices = 12;

/**
 * Counts compositions by walking every set partition of V(g) as a restricted growth string
 * and keeping those whose blocks all induce connected subgraphs.
 *
 * Independent of CompositionCounter: the only shared routine is is_connected_induced.
 */
inline BigNat naive_count_via_set_partitions(const Graph& g) {
    const Vertex n = g.num_vertices();
    if (n > kNaiveOracleMaxVertices)
        throw oracle_cap_error("naive oracle supports at most 12 vertices, got " + std::to_string(n));
    if (n == 0) return 1;

    // rgs[i] is the block of vertex i; rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]).
    std::array<unsigned, kNaiveOracleMaxVertices> rgs{};
    std::array<unsigned, kNaiveOracleMaxVertices> prefix_max{};
    std::uint64_t good = 0;
    while (true) {
        std::array<VertexSet, kNaiveOracleMaxVertices> blocks{};
        unsigned nblocks = 0;
        for (Vertex i = 0; i < n; ++i) {
            blocks[rgs[i]].insert(i);
            if (rgs[i] + 1 > nblocks) nblocks = rgs[i] + 1;
        }
        bool ok = true;
        for (unsigned b = 0; b < nblocks && ok; ++b) ok = is_connected_induced(g, blocks[b]);
        if (ok) ++good;

        // Next string in lexicographic order.
        Vertex i = n - 1;
        while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
        if (i == 0) break;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (Vertex j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[j - 1];
        }
    }
    return BigNat(good);
}

}  // namespace gcomp
