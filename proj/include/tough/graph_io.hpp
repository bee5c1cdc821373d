#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tough/graph.hpp"

namespace tough {

/// graph6 encoding without header or trailing newline.
std::string encode_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and one trailing newline.
/// Throws GraphError on malformed or truncated input.
Graph decode_graph6(std::string_view bytes);

/// Undirected DOT source; highlighted vertices are filled red.
std::string to_dot(const Graph& g, const VertexSet& highlight);
std::string to_dot(const Graph& g);

/// {"n": int, "edges": [[u,v],...]} with u < v, sorted.
nlohmann::json to_edge_json(const Graph& g);
Graph from_edge_json(const nlohmann::json& j);

/// Plain text: first line "n m", then one "u v" line per edge.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

enum class GraphFormat { g6, dot, edges, json };

GraphFormat parse_format(std::string_view name);
std::string format_graph(const Graph& g, GraphFormat fmt);

/// Sniffs g6 / JSON / edge-list content. DOT is output-only.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

}  // namespace tough
