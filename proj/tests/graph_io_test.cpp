#include "gcomp/families.hpp"
#include "gcomp/graph_io.hpp"
#include "gcomp/random_graphs.hpp"

#include <gtest/gtest.h>

using namespace gcomp;

TEST(GraphJson, Parses) {
    auto g = parse_graph_json(R"({"vertices": 3, "edges": [[0,1],[1,2]]})");
    EXPECT_EQ(g, build_family(FamilySpec::path(3)));
    EXPECT_EQ(parse_graph_json(R"({"vertices": 4})").num_edges(), 0u);
}

TEST(GraphJson, ValidatesLikeBuildGraph) {
    EXPECT_THROW(parse_graph_json(R"({"vertices": 2, "edges": [[0,1],[1,0]]})"), graph_error);
    EXPECT_THROW(parse_graph_json(R"({"vertices": 2, "edges": [[0,0]]})"), graph_error);
    EXPECT_THROW(parse_graph_json(R"({"vertices": 2, "edges": [[0,2]]})"), graph_error);
    EXPECT_THROW(parse_graph_json(R"({"vertices": 2, "edges": [[0,-1]]})"), graph_error);
    EXPECT_THROW(parse_graph_json(R"({"vertices": 2, "edges": [[0,1,1]]})"), graph_error);
    EXPECT_THROW(parse_graph_json(R"({"edges": []})"), graph_error);
    EXPECT_THROW(parse_graph_json(R"({"vertices": 65})"), graph_error);
    EXPECT_THROW(parse_graph_json("{nope"), graph_error);
}

TEST(GraphEdgeList, ParsesWithCommentsAndBlankLines) {
    const std::string text =
        "# the paw graph\n"
        "\n"
        "vertices 4\n"
        "0 1\n"
        "  # indented comment\n"
        "1 2\n"
        "0 2\n"
        "1 3\n";
    auto g = parse_graph_edgelist(text);
    EXPECT_EQ(g.num_vertices(), 4u);
    EXPECT_EQ(g.num_edges(), 4u);
    EXPECT_TRUE(g.has_edge(3, 1));
}

TEST(GraphEdgeList, Rejections) {
    EXPECT_THROW(parse_graph_edgelist("0 1\n"), graph_error);
    EXPECT_THROW(parse_graph_edgelist("# nothing\n"), graph_error);
    EXPECT_THROW(parse_graph_edgelist("vertices 3\n0 1 2\n"), graph_error);
    EXPECT_THROW(parse_graph_edgelist("vertices 3\n0\n"), graph_error);
    EXPECT_THROW(parse_graph_edgelist("vertices 3\n0 1\n1 0\n"), graph_error);
    EXPECT_THROW(parse_graph_edgelist("vertices 3\n0 3\n"), graph_error);
}

TEST(GraphFormats, SniffAndRoundTrip) {
    EXPECT_EQ(sniff_format("  {\"vertices\":1}"), GraphFormat::Json);
    EXPECT_EQ(sniff_format("vertices 1\n"), GraphFormat::EdgeList);

    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = random_graph(rng, static_cast<Vertex>(trial % 11), 0.4);
        EXPECT_EQ(parse_graph_json(graph_to_json(g).dump()), g);
        EXPECT_EQ(parse_graph_edgelist(write_graph_edgelist(g)), g);
    }
}

TEST(GraphFormats, MissingFile) {
    EXPECT_THROW(read_graph_file("/nonexistent/graph.json"), graph_error);
}
