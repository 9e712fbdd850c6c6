#include "gcomp/families.hpp"
#include "gcomp/graph.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace gcomp;

namespace {

std::size_t degree_sum(const Graph& g) {
    std::size_t s = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) s += g.degree(v);
    return s;
}

void expect_simple(const Graph& g) {
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        EXPECT_FALSE(g.neighbors(u).contains(u));
        EXPECT_TRUE(g.neighbors(u).is_subset_of(g.vertices()));
        for (auto v : g.neighbors(u)) EXPECT_TRUE(g.neighbors(v).contains(u));
    }
    EXPECT_EQ(degree_sum(g), 2 * g.num_edges());
}

}  // namespace

TEST(VertexSet, BasicAlgebra) {
    VertexSet a{0, 2, 5};
    VertexSet b{2, 3};
    EXPECT_EQ((a | b), (VertexSet{0, 2, 3, 5}));
    EXPECT_EQ((a & b), (VertexSet{2}));
    EXPECT_EQ((a - b), (VertexSet{0, 5}));
    EXPECT_EQ(a.size(), 3u);
    EXPECT_EQ(a.min(), 0u);
    EXPECT_EQ(b.min(), 2u);
    EXPECT_EQ(a.to_vector(), (std::vector<Vertex>{0, 2, 5}));
    EXPECT_EQ(a.to_string(), "0,2,5");
    EXPECT_THROW((void)VertexSet{}.min(), std::logic_error);
    EXPECT_THROW(VertexSet::singleton(64), std::out_of_range);
    EXPECT_EQ(VertexSet::first_n(64).size(), 64u);
    EXPECT_EQ(VertexSet::first_n(63).min(), 0u);
}

TEST(VertexSet, SubsetIterationVisitsEverySubsetOnce) {
    VertexSet s{1, 4, 6, 9};
    std::vector<VertexSet> seen;
    s.for_each_subset([&](VertexSet sub) { seen.push_back(sub); });
    EXPECT_EQ(seen.size(), 16u);
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
    for (auto sub : seen) EXPECT_TRUE(sub.is_subset_of(s));
}

TEST(BuildGraph, PathAndEdgeless) {
    auto p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    EXPECT_EQ(p4.num_vertices(), 4u);
    EXPECT_EQ(p4.num_edges(), 3u);
    EXPECT_EQ(p4, build_family(FamilySpec::path(4)));
    // Edge order and orientation do not matter.
    EXPECT_EQ(p4, build_graph(4, {{3, 2}, {0, 1}, {2, 1}}));

    auto e3 = build_graph(3, std::vector<Edge>{});
    EXPECT_EQ(e3.num_edges(), 0u);
    for (Vertex v = 0; v < 3; ++v) EXPECT_TRUE(e3.neighbors(v).empty());
}

TEST(BuildGraph, RejectionsIdentifyTheOffendingPair) {
    try {
        build_graph(2, {{0, 1}, {1, 0}});
        FAIL() << "duplicate edge accepted";
    } catch (const graph_error& e) {
        ASSERT_TRUE(e.has_edge());
        EXPECT_EQ(e.edge(), (Edge{1, 0}));
    }
    try {
        build_graph(3, {{1, 1}});
        FAIL() << "self-loop accepted";
    } catch (const graph_error& e) {
        EXPECT_EQ(e.edge(), (Edge{1, 1}));
    }
    try {
        build_graph(3, {{0, 3}});
        FAIL() << "out-of-range endpoint accepted";
    } catch (const graph_error& e) {
        EXPECT_EQ(e.edge(), (Edge{0, 3}));
    }
    EXPECT_THROW(build_graph(65, std::vector<Edge>{}), graph_error);
}

TEST(Families, EdgeCounts) {
    for (Vertex n = 0; n <= 12; ++n) EXPECT_EQ(build_family(FamilySpec::path(n)).num_edges(), n == 0 ? 0 : n - 1);
    for (Vertex n = 3; n <= 12; ++n) EXPECT_EQ(build_family(FamilySpec::cycle(n)).num_edges(), n);
    for (Vertex n = 4; n <= 12; ++n) EXPECT_EQ(build_family(FamilySpec::wheel(n)).num_edges(), 2 * (n - 1));
    for (Vertex n = 1; n <= 12; ++n) {
        auto l = build_family(FamilySpec::ladder(n));
        EXPECT_EQ(l.num_vertices(), 2 * n);
        EXPECT_EQ(l.num_edges(), 3 * n - 2);
    }
    for (Vertex m = 0; m <= 6; ++m)
        for (Vertex n = 0; n <= 6; ++n) {
            auto k = build_family(FamilySpec::bipartite(m, n));
            EXPECT_EQ(k.num_vertices(), m + n);
            EXPECT_EQ(k.num_edges(), m * n);
        }
    for (Vertex n = 1; n <= 10; ++n) {
        EXPECT_EQ(build_family(FamilySpec::complete(n)).num_edges(), n * (n - 1) / 2);
        EXPECT_EQ(build_family(FamilySpec::star(n)).num_edges(), n - 1);
    }
    for (Vertex n = 2; n <= 10; ++n)
        EXPECT_EQ(build_family(FamilySpec::complete_minus_edge(n)).num_edges(), n * (n - 1) / 2 - 1);
}

TEST(Families, SmallCoincidences) {
    // L_2 is the 4-cycle, up to relabelling: 4 vertices, 4 edges, all degree 2, connected.
    auto l2 = build_family(FamilySpec::ladder(2));
    EXPECT_EQ(l2.num_vertices(), 4u);
    EXPECT_EQ(l2.num_edges(), 4u);
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(l2.degree(v), 2u);
    EXPECT_TRUE(is_connected(l2));

    EXPECT_EQ(build_family(FamilySpec::wheel(4)), build_family(FamilySpec::complete(4)));
    EXPECT_EQ(build_family(FamilySpec::wheel(1)).num_vertices(), 1u);
    EXPECT_EQ(build_family(FamilySpec::wheel(2)), build_family(FamilySpec::path(2)));
    EXPECT_EQ(build_family(FamilySpec::wheel(3)), build_family(FamilySpec::complete(3)));
    EXPECT_EQ(build_family(FamilySpec::wheel(6)).degree(5), 5u);

    auto pet = build_family(FamilySpec::petersen());
    EXPECT_EQ(pet.num_vertices(), 10u);
    EXPECT_EQ(pet.num_edges(), 15u);
    for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(pet.degree(v), 3u);
    // Girth 5: no triangles, no 4-cycles (no two vertices share two neighbours).
    for (Vertex u = 0; u < 10; ++u)
        for (Vertex v = u + 1; v < 10; ++v) EXPECT_LE((pet.neighbors(u) & pet.neighbors(v)).size(), pet.has_edge(u, v) ? 0u : 1u);
}

TEST(Families, InvalidSizesRejected) {
    EXPECT_THROW(build_family(FamilySpec::cycle(2)), std::invalid_argument);
    EXPECT_THROW(build_family(FamilySpec::wheel(0)), std::invalid_argument);
    EXPECT_THROW(build_family(FamilySpec::ladder(0)), std::invalid_argument);
    EXPECT_THROW(build_family(FamilySpec::complete_minus_edge(1)), std::invalid_argument);
    EXPECT_THROW(build_family(FamilySpec::tree({0, 2})), std::invalid_argument);
    EXPECT_THROW(build_family(FamilySpec::ladder(33)), graph_error);
    EXPECT_EQ(build_family(FamilySpec::tree({0, 0, 1})).num_edges(), 3u);
}

TEST(Families, AllSatisfyGraphInvariants) {
    std::vector<FamilySpec> specs = {FamilySpec::path(7),      FamilySpec::cycle(9),       FamilySpec::complete(6),
                                     FamilySpec::star(8),      FamilySpec::tree({0, 0, 1, 1, 3}),
                                     FamilySpec::wheel(9),     FamilySpec::ladder(5),      FamilySpec::bipartite(3, 4),
                                     FamilySpec::petersen(),   FamilySpec::complete_minus_edge(5)};
    for (const auto& s : specs) {
        auto g = build_family(s);
        expect_simple(g);
        EXPECT_EQ(is_connected_induced(g, g.vertices()), is_connected(g));
        EXPECT_TRUE(is_connected(g)) << family_name(s.kind);
    }
}

TEST(Connectivity, InducedSubsets) {
    auto p4 = build_family(FamilySpec::path(4));
    EXPECT_FALSE(is_connected_induced(p4, {0, 2}));
    EXPECT_TRUE(is_connected_induced(p4, {1, 2, 3}));
    for (Vertex v = 0; v < 4; ++v) EXPECT_TRUE(is_connected_induced(p4, VertexSet::singleton(v)));
    auto k23 = build_family(FamilySpec::bipartite(2, 3));
    EXPECT_TRUE(is_connected_induced(k23, {0, 2}));
    EXPECT_FALSE(is_connected_induced(k23, {0, 1}));
    EXPECT_THROW(is_connected_induced(p4, VertexSet{}), std::invalid_argument);
    EXPECT_THROW(is_connected_induced(p4, {0, 7}), std::invalid_argument);
    EXPECT_FALSE(is_connected(disjoint_union(p4, p4)));
}

TEST(Surgery, DeleteEdges) {
    auto k5 = build_family(FamilySpec::complete(5));
    auto adj = delete_edges(k5, {{0, 1}, {0, 2}});
    EXPECT_EQ(adj.num_edges(), 8u);
    EXPECT_EQ(adj.degree(0), 2u);
    auto disj = delete_edges(k5, {{0, 1}, {3, 2}});
    EXPECT_EQ(disj.num_edges(), 8u);
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(disj.degree(v), 3u);
    EXPECT_EQ(disj.num_vertices(), 5u);
    EXPECT_THROW(delete_edges(build_family(FamilySpec::path(3)), {{0, 2}}), graph_error);
    EXPECT_THROW(delete_edges(k5, {{0, 1}, {1, 0}}), graph_error);
}

TEST(Surgery, DisjointUnion) {
    auto p2 = build_family(FamilySpec::path(2));
    auto u = disjoint_union(p2, p2);
    EXPECT_EQ(u.num_vertices(), 4u);
    EXPECT_EQ(u.edges(), (std::vector<Edge>{{0, 1}, {2, 3}}));
    auto k3 = build_family(FamilySpec::complete(3));
    EXPECT_EQ(disjoint_union(k3, Graph{}), k3);
    EXPECT_EQ(disjoint_union(Graph{}, k3), k3);
    auto kk = disjoint_union(k3, k3);
    EXPECT_EQ(kk.num_vertices(), 6u);
    EXPECT_EQ(kk.num_edges(), 6u);
    EXPECT_EQ(reach_within(kk, kk.vertices(), 0), (VertexSet{0, 1, 2}));
    expect_simple(kk);
}

TEST(Surgery, JoinAtVertex) {
    auto p2 = build_family(FamilySpec::path(2));
    EXPECT_EQ(join_at_vertex(p2, 1, p2, 0), build_family(FamilySpec::path(3)));
    auto s3 = build_family(FamilySpec::star(3));
    EXPECT_EQ(join_at_vertex(s3, 0, s3, 0), build_family(FamilySpec::star(5)));
    auto k3 = build_family(FamilySpec::complete(3));
    auto bowtie = join_at_vertex(k3, 0, k3, 0);
    EXPECT_EQ(bowtie.num_vertices(), 5u);
    EXPECT_EQ(bowtie.num_edges(), 6u);
    EXPECT_EQ(bowtie.degree(0), 4u);
    expect_simple(bowtie);
    EXPECT_THROW(join_at_vertex(k3, 3, k3, 0), graph_error);
    EXPECT_THROW(join_at_vertex(k3, 0, k3, 5), graph_error);
}

TEST(Surgery, JoinByBridge) {
    auto p1 = build_family(FamilySpec::path(1));
    auto p2 = build_family(FamilySpec::path(2));
    EXPECT_EQ(join_by_bridge(p1, 0, p1, 0), p2);
    EXPECT_EQ(join_by_bridge(p2, 1, p2, 0), build_family(FamilySpec::path(4)));
    auto k3 = build_family(FamilySpec::complete(3));
    auto g = join_by_bridge(k3, 2, k3, 0);
    EXPECT_EQ(g.num_vertices(), 6u);
    EXPECT_EQ(g.num_edges(), 7u);
    EXPECT_TRUE(is_connected(g));
    EXPECT_FALSE(is_connected(delete_edges(g, {{2, 3}})));
    EXPECT_THROW(join_by_bridge(k3, 0, k3, 3), graph_error);
}

TEST(Surgery, RelabelPreservesStructure) {
    auto pet = build_family(FamilySpec::petersen());
    std::vector<Vertex> perm(10);
    std::iota(perm.rbegin(), perm.rend(), Vertex{0});
    auto r = relabel(pet, perm);
    EXPECT_EQ(r.num_edges(), 15u);
    EXPECT_TRUE(r.has_edge(9, 8));  // image of (0,1)
    EXPECT_THROW(relabel(pet, std::vector<Vertex>{0, 0, 1, 2, 3, 4, 5, 6, 7, 8}), std::invalid_argument);
}
