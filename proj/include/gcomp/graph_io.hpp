#pragma once

#include "gcomp/graph.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>

namespace gcomp {

enum class GraphFormat { Json, EdgeList };

/// Parses {"vertices": N, "edges": [[u, v], ...]}.
inline Graph parse_graph_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw graph_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_number_integer())
        throw graph_error("JSON graph needs an integer \"vertices\" field");
    const auto n = doc["vertices"].get<long long>();
    if (n < 0 || n > static_cast<long long>(kMaxVertices)) throw graph_error("vertex count out of range: " + std::to_string(n));
    std::vector<Edge> es;
    if (doc.contains("edges")) {
        const auto& arr = doc["edges"];
        if (!arr.is_array()) throw graph_error("\"edges\" must be an array");
        for (const auto& e : arr) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw graph_error("each edge must be a pair of integers: " + e.dump());
            const auto u = e[0].get<long long>();
            const auto v = e[1].get<long long>();
            if (u < 0 || v < 0) throw graph_error("negative vertex index in edge " + e.dump());
            es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
    }
    return build_graph(static_cast<Vertex>(n), es);
}

/**
 * Parses a plain edge list:
 *
 *     # comment
 *     vertices 4
 *     0 1
 *     1 2
 *
 * Blank lines and lines starting with '#' are ignored.
 */
inline Graph parse_graph_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long long n = -1;
    std::vector<Edge> es;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        auto bad = [&](const std::string& why) {
            return graph_error("edge list line " + std::to_string(lineno) + ": " + why);
        };
        if (n < 0) {
            std::string kw;
            if (!(ls >> kw >> n) || kw != "vertices") throw bad("expected \"vertices N\"");
            if (n < 0 || n > static_cast<long long>(kMaxVertices)) throw bad("vertex count out of range");
        } else {
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) throw bad("expected \"u v\"");
            if (u < 0 || v < 0) throw bad("negative vertex index");
            es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        std::string extra;
        if (ls >> extra) throw bad("trailing text");
    }
    if (n < 0) throw graph_error("edge list has no \"vertices N\" line");
    return build_graph(static_cast<Vertex>(n), es);
}

inline Graph parse_graph(const std::string& text, GraphFormat fmt) {
    return fmt == GraphFormat::Json ? parse_graph_json(text) : parse_graph_edgelist(text);
}

/// JSON when the first significant character is '{', edge list otherwise.
inline GraphFormat sniff_format(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    return first != std::string::npos && text[first] == '{' ? GraphFormat::Json : GraphFormat::EdgeList;
}

inline Graph read_graph_file(const std::string& path, std::optional<GraphFormat> fmt = std::nullopt) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw graph_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    const std::string text = buf.str();
    return parse_graph(text, fmt.value_or(sniff_format(text)));
}

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"vertices", g.num_vertices()}, {"edges", std::move(edges)}};
}

inline std::string write_graph_edgelist(const Graph& g) {
    std::string out = "vertices " + std::to_string(g.num_vertices()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace gcomp
