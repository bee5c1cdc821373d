#include "tough/graph_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace tough {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void put_size(std::string& out, std::uint64_t n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

int sextet(char c)
{
    int v = static_cast<unsigned char>(c) - 63;
    if (v < 0 || v > 63)
        throw GraphError("graph6: byte " + std::to_string(static_cast<unsigned char>(c)) + " outside 63..126");
    return v;
}

}  // namespace

std::string encode_graph6(const Graph& g)
{
    std::string out;
    const auto n = static_cast<std::uint64_t>(g.n());
    put_size(out, n);
    int acc = 0, filled = 0;
    for (Vertex j = 1; j < g.n(); ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph decode_graph6(std::string_view bytes)
{
    if (bytes.substr(0, kHeader.size()) == kHeader)
        bytes.remove_prefix(kHeader.size());
    if (!bytes.empty() && bytes.back() == '\n')
        bytes.remove_suffix(1);
    if (!bytes.empty() && bytes.back() == '\r')
        bytes.remove_suffix(1);
    if (bytes.empty())
        throw GraphError("graph6: empty input");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto take = [&](int count) {
        if (pos + count > bytes.size())
            throw GraphError("graph6: truncated size field");
        std::uint64_t v = 0;
        for (int k = 0; k < count; ++k)
            v = (v << 6) | static_cast<std::uint64_t>(sextet(bytes[pos++]));
        return v;
    };
    if (bytes[0] != 126) {
        n = take(1);
    } else if (bytes.size() > 1 && bytes[1] != 126) {
        pos = 1;
        n = take(3);
    } else {
        pos = 2;
        n = take(6);
    }
    if (n > 1u << 20)
        throw GraphError("graph6: order " + std::to_string(n) + " too large to materialize");

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t need = (bits + 5) / 6;
    if (bytes.size() - pos < need)
        throw GraphError("graph6: truncated adjacency data (need " + std::to_string(need) + " bytes, have " +
                         std::to_string(bytes.size() - pos) + ")");
    if (bytes.size() - pos > need)
        throw GraphError("graph6: trailing bytes after adjacency data");

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (Vertex j = 1; j < static_cast<Vertex>(n); ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            int byte = sextet(bytes[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1)
                edges.emplace_back(i, j);
        }
    for (; k < need * 6; ++k)
        if ((sextet(bytes[pos + k / 6]) >> (5 - k % 6)) & 1)
            throw GraphError("graph6: nonzero padding bits");
    return make_graph(static_cast<int>(n), edges);
}

std::string to_dot(const Graph& g, const VertexSet& highlight)
{
    std::ostringstream os;
    os << "graph G {\n";
    for (Vertex v = 0; v < g.n(); ++v) {
        os << "  " << v;
        if (highlight.contains(v))
            os << " [style=filled, fillcolor=red]";
        os << ";\n";
    }
    for (auto [u, v] : g.edges())
        os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const Graph& g)
{
    return to_dot(g, VertexSet(g.n()));
}

nlohmann::json to_edge_json(const Graph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"n", g.n()}, {"edges", edges}};
}

Graph from_edge_json(const nlohmann::json& j)
{
    try {
        int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw GraphError("edge JSON: each edge must be a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return make_graph(n, edges);
    } catch (const nlohmann::json::exception& ex) {
        throw GraphError(std::string("edge JSON: ") + ex.what());
    }
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream os;
    os << g.n() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        os << u << ' ' << v << '\n';
    return os.str();
}

Graph from_edge_list(std::string_view text)
{
    std::istringstream is{std::string(text)};
    int n = 0, m = 0;
    if (!(is >> n >> m) || n < 0 || m < 0)
        throw GraphError("edge list: missing 'n m' header");
    std::vector<Edge> edges;
    for (int k = 0; k < m; ++k) {
        Vertex u, v;
        if (!(is >> u >> v))
            throw GraphError("edge list: truncated after " + std::to_string(k) + " edges");
        edges.emplace_back(u, v);
    }
    std::string rest;
    if (is >> rest)
        throw GraphError("edge list: trailing content");
    return make_graph(n, edges);
}

GraphFormat parse_format(std::string_view name)
{
    if (name == "g6")
        return GraphFormat::g6;
    if (name == "dot")
        return GraphFormat::dot;
    if (name == "edges")
        return GraphFormat::edges;
    if (name == "json")
        return GraphFormat::json;
    throw GraphError("unknown graph format '" + std::string(name) + "'");
}

std::string format_graph(const Graph& g, GraphFormat fmt)
{
    switch (fmt) {
    case GraphFormat::g6:
        return encode_graph6(g) + "\n";
    case GraphFormat::dot:
        return to_dot(g);
    case GraphFormat::edges:
        return to_edge_list(g);
    case GraphFormat::json:
        return to_edge_json(g).dump() + "\n";
    }
    return {};
}

Graph parse_graph(std::string_view text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw GraphError("empty graph file");
    char c = text[first];
    // g6 bytes are all >= 63, so '{' followed by a quote or blank is JSON
    char after = first + 1 < text.size() ? text[first + 1] : '\0';
    if (c == '{' && (after == '"' || after == ' ' || after == '\n' || after == '\t' || after == '\r')) {
        try {
            return from_edge_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::parse_error& ex) {
            throw GraphError(std::string("edge JSON: ") + ex.what());
        }
    }
    if (c >= '0' && c <= '9')
        return from_edge_list(text);
    if (c == 'g' && text.substr(first, 5) == "graph")
        throw GraphError("DOT input is not supported; use g6, edges or json");
    return decode_graph6(text.substr(first));
}

Graph read_graph_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw GraphError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

}  // namespace tough
