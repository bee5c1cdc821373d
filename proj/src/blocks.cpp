#include "tough/blocks.hpp"

#include <algorithm>

namespace tough {

std::string to_string(BlockKind kind)
{
    switch (kind) {
    case BlockKind::L1: return "L1";
    case BlockKind::L2: return "L2";
    case BlockKind::L3: return "L3";
    case BlockKind::L4: return "L4";
    }
    return "?";
}

BlockKind parse_block_kind(std::string_view name)
{
    if (name == "L1") return BlockKind::L1;
    if (name == "L2") return BlockKind::L2;
    if (name == "L3") return BlockKind::L3;
    if (name == "L4") return BlockKind::L4;
    throw GraphError("unknown block kind '" + std::string(name) + "'");
}

namespace {

// w_i -> i - 1
constexpr Vertex w(int i) { return i - 1; }

std::vector<Edge> l1_edges()
{
    std::vector<Edge> edges;
    for (int i = 1; i <= 8; ++i)
        edges.emplace_back(w(i), w(i % 8 + 1));
    edges.insert(edges.end(), {{w(2), w(4)}, {w(4), w(6)}, {w(6), w(8)}, {w(2), w(8)}});
    return edges;
}

}  // namespace

Block block(BlockKind kind)
{
    switch (kind) {
    case BlockKind::L1:
        return {make_graph(8, l1_edges()), w(1), w(5), kind};
    case BlockKind::L2: {
        // drop w1w2, w2w8, then fold w8 onto w2's slot
        std::vector<Edge> edges;
        for (auto [a, b] : l1_edges()) {
            Edge e = std::minmax(a, b);
            if (e == Edge{w(1), w(2)} || e == Edge{w(2), w(8)})
                continue;
            auto fold = [](Vertex v) { return v == w(8) ? w(2) : v; };
            edges.emplace_back(fold(a), fold(b));
        }
        return {make_graph(7, edges), w(1), w(5), kind};
    }
    case BlockKind::L3: {
        auto edges = l1_edges();
        edges.insert(edges.end(), {{w(4), w(9)}, {w(6), w(9)}});
        return {make_graph(9, edges), w(1), w(5), kind};
    }
    case BlockKind::L4:
        return {make_graph(5, {{w(1), w(2)}, {w(2), w(3)}, {w(1), w(3)}, {w(1), w(4)}, {w(3), w(5)}}), w(4), w(5),
                kind};
    }
    throw GraphError("bad block kind");
}

std::vector<Vertex> block_cutset(BlockKind kind)
{
    switch (kind) {
    case BlockKind::L1:
    case BlockKind::L3: return {w(2), w(4), w(6), w(8)};
    case BlockKind::L2: return {w(2), w(4), w(6)};
    case BlockKind::L4: return {w(1), w(3)};
    }
    return {};
}

bool is_path_free(BlockKind kind)
{
    return kind != BlockKind::L4;
}

TerminalGraph f_m(std::span<const BlockKind> kinds)
{
    if (kinds.empty())
        throw GraphError("F_m needs at least one block");
    TerminalGraph out;
    std::vector<Edge> edges;
    int n = 0;
    for (BlockKind kind : kinds) {
        Block b = block(kind);
        for (auto [u, v] : b.graph.edges())
            edges.emplace_back(u + n, v + n);
        out.offsets.push_back(n);
        out.terminals.emplace_back(b.x + n, b.y + n);
        n += b.graph.n();
    }
    std::vector<Vertex> ends;
    for (auto [x, y] : out.terminals) {
        ends.push_back(x);
        ends.push_back(y);
    }
    for (std::size_t i = 0; i < ends.size(); ++i)
        for (std::size_t j = i + 1; j < ends.size(); ++j)
            edges.emplace_back(ends[i], ends[j]);
    out.graph = make_graph(n, edges);
    return out;
}

Graph g_construct(int l, std::span<const BlockKind> kinds)
{
    if (l < 0)
        throw GraphError("negative clique size");
    if (kinds.empty()) {
        if (l == 0)
            throw GraphError("join construction with l = 0 and no blocks is empty");
        return complete_graph(l);
    }
    return join(complete_graph(l), f_m(kinds).graph);
}

Graph complete_bipartite(int a, int b)
{
    if (a < 0 || b < 0)
        throw GraphError("negative part size");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v)
            edges.emplace_back(u, v);
    return make_graph(a + b, edges);
}

Graph case2_graph()
{
    std::vector<Edge> edges;
    for (int i = 1; i <= 6; ++i)
        edges.emplace_back(i - 1, i % 6);
    edges.insert(edges.end(), {{0, 6}, {3, 6}, {1, 5}});
    return make_graph(7, edges);
}

Graph case3_graph(int a, int b)
{
    if (!(a > b && b >= 2))
        throw GraphError("case 3 graph needs a > b >= 2");
    const int k = a - b + 1;
    auto y = [&](int i) { return k + i - 1; };
    auto z = [&](int i) { return k + b + i - 1; };
    const int n = k + 2 * b;
    std::vector<Edge> edges;
    for (Vertex x = 0; x < k; ++x)
        for (Vertex v = x + 1; v < n; ++v)
            edges.emplace_back(x, v);
    for (int i = 1; i <= b; ++i) {
        edges.emplace_back(y(i), z(i));
        for (int j = i + 1; j <= b; ++j)
            edges.emplace_back(z(i), z(j));
    }
    return make_graph(n, edges);
}

Graph petersen()
{
    return make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Graph inflate_triangles(const Graph& cubic)
{
    for (Vertex v = 0; v < cubic.n(); ++v)
        if (cubic.degree(v) != 3)
            throw GraphError("triangle inflation needs a cubic graph; vertex " + std::to_string(v) + " has degree " +
                             std::to_string(cubic.degree(v)));
    std::vector<int> used(static_cast<std::size_t>(cubic.n()), 0);
    std::vector<Edge> edges;
    for (Vertex v = 0; v < cubic.n(); ++v)
        edges.insert(edges.end(), {{3 * v, 3 * v + 1}, {3 * v, 3 * v + 2}, {3 * v + 1, 3 * v + 2}});
    for (auto [u, v] : cubic.edges())
        edges.emplace_back(3 * u + used[u]++, 3 * v + used[v]++);
    return make_graph(3 * cubic.n(), edges);
}

}  // namespace tough
