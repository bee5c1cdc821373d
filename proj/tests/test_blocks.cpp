#include <doctest.h>

#include <algorithm>
#include <queue>

#include "tough/blocks.hpp"
#include "tough/oracles.hpp"

using namespace tough;

namespace {

std::vector<int> degree_sequence(const Graph& g)
{
    std::vector<int> d;
    for (Vertex v = 0; v < g.n(); ++v)
        d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

int girth(const Graph& g)
{
    int best = 1 << 30;
    for (Vertex s = 0; s < g.n(); ++s) {
        std::vector<int> dist(static_cast<std::size_t>(g.n()), -1), parent(static_cast<std::size_t>(g.n()), -1);
        std::queue<Vertex> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex u : g.neighbors(v)) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    q.push(u);
                } else if (parent[v] != u) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("L1 is C8 plus the chords w2w4, w4w6, w6w8, w2w8")
{
    Block b = block(BlockKind::L1);
    CHECK(b.graph.n() == 8);
    CHECK(b.graph.edges() == std::vector<Edge>{{0, 1}, {0, 7}, {1, 2}, {1, 3}, {1, 7}, {2, 3},
                                               {3, 4}, {3, 5}, {4, 5}, {5, 6}, {5, 7}, {6, 7}});
    CHECK(degree_sequence(b.graph) == std::vector<int>{2, 2, 2, 2, 4, 4, 4, 4});
    CHECK(b.x == 0);
    CHECK(b.y == 4);
    CHECK(b.graph.degree(b.x) == 2);
    CHECK(b.graph.degree(b.y) == 2);
}

TEST_CASE("L2 merges w2 and w8 after dropping w1w2 and w2w8")
{
    Block b = block(BlockKind::L2);
    CHECK(b.graph.n() == 7);
    CHECK(b.graph.edge_count() == 10);
    // u sits in w2's slot; w1=0, w3=2, w4=3, w6=5, w7=6
    CHECK(b.graph.neighbors(1) == std::vector<Vertex>{0, 2, 3, 5, 6});
    CHECK(b.graph.degree(b.x) == 1);
    CHECK(b.graph.degree(b.y) == 2);
    CHECK(b.x == 0);
    CHECK(b.y == 4);
}

TEST_CASE("L3 adds w9 on w4 and w6; L4 is a triangle with two pendants")
{
    Block l3 = block(BlockKind::L3);
    CHECK(l3.graph.n() == 9);
    CHECK(l3.graph.edge_count() == 14);
    CHECK(l3.graph.neighbors(8) == std::vector<Vertex>{3, 5});

    Block l4 = block(BlockKind::L4);
    CHECK(l4.graph.n() == 5);
    CHECK(l4.graph.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 4}});
    CHECK(l4.x == 3);
    CHECK(l4.y == 4);
    CHECK(l4.graph.degree(l4.x) == 1);
    CHECK(l4.graph.degree(l4.y) == 1);
}

TEST_CASE("only L4 has a Hamilton path between its terminals")
{
    for (auto kind : {BlockKind::L1, BlockKind::L2, BlockKind::L3}) {
        Block b = block(kind);
        CAPTURE(to_string(kind));
        CHECK(has_hamilton_path(b.graph, b.x, b.y).verdict == Verdict::no);
        CHECK(hamilton_path_dp(b.graph, b.x, b.y).verdict == Verdict::no);
        CHECK(is_path_free(kind));
    }
    Block l4 = block(BlockKind::L4);
    auto res = has_hamilton_path(l4.graph, l4.x, l4.y);
    REQUIRE(res.verdict == Verdict::yes);
    CHECK(res.witness == std::vector<Vertex>{3, 0, 1, 2, 4});
    CHECK_FALSE(is_path_free(BlockKind::L4));
}

TEST_CASE("block cutsets leave the expected inner components")
{
    // L1/L3: w3, w7 (and w9) isolated; L2: w3, w7; L4: w2
    struct Expect {
        BlockKind kind;
        int size;
        int inner;
    };
    for (auto [kind, size, inner] : {Expect{BlockKind::L1, 4, 2}, Expect{BlockKind::L2, 3, 2},
                                     Expect{BlockKind::L3, 4, 3}, Expect{BlockKind::L4, 2, 1}}) {
        Block b = block(kind);
        auto cut = block_cutset(kind);
        CHECK(static_cast<int>(cut.size()) == size);
        auto comp = components(b.graph, VertexSet(b.graph.n(), cut));
        int without_terminals = 0;
        for (const auto& part : comp.parts)
            if (std::find(part.begin(), part.end(), b.x) == part.end() &&
                std::find(part.begin(), part.end(), b.y) == part.end())
                ++without_terminals;
        CHECK(without_terminals == inner);
    }
}

TEST_CASE("F_m puts a clique on the terminals")
{
    std::vector<BlockKind> one{BlockKind::L1};
    auto f1 = f_m(one);
    CHECK(f1.graph.n() == 8);
    CHECK(f1.graph.edge_count() == 13);

    std::vector<BlockKind> two{BlockKind::L1, BlockKind::L1};
    auto f2 = f_m(two);
    CHECK(f2.graph.n() == 16);
    CHECK(f2.graph.edge_count() == 30);
    CHECK(f2.terminals == std::vector<Edge>{{0, 4}, {8, 12}});

    std::vector<BlockKind> l4{BlockKind::L4};
    CHECK(f_m(l4).graph.edge_count() == 6);
    CHECK_THROWS_AS(f_m(std::span<const BlockKind>{}), GraphError);
}

TEST_CASE("join construction numbering and sizes")
{
    std::vector<BlockKind> l2{BlockKind::L2};
    CHECK(g_construct(2, l2).n() == 9);

    std::vector<BlockKind> five(5, BlockKind::L1);
    Graph g = g_construct(2, five);
    CHECK(g.n() == 42);
    // T is universal
    CHECK(g.degree(0) == 41);
    CHECK(g.degree(1) == 41);
    // terminal clique on 10 vertices: C(10,2) terminal pairs adjacent
    int terminal_pairs = 0;
    std::vector<Vertex> terms;
    for (int i = 0; i < 5; ++i) {
        terms.push_back(2 + 8 * i);
        terms.push_back(2 + 8 * i + 4);
    }
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j)
            terminal_pairs += g.has_edge(terms[i], terms[j]);
    CHECK(terminal_pairs == 45);

    std::vector<BlockKind> l1{BlockKind::L1};
    CHECK(g_construct(0, l1) == f_m(l1).graph);
    CHECK_THROWS_AS(g_construct(0, std::span<const BlockKind>{}), GraphError);
}

TEST_CASE("complete bipartite graphs")
{
    Graph k23 = complete_bipartite(2, 3);
    CHECK(k23.n() == 5);
    CHECK(k23.edge_count() == 6);
    CHECK(complete_bipartite(1, 1) == complete_graph(2));
    CHECK(independence_number(k23) == 3);
    CHECK(is_hamiltonian(k23).verdict == Verdict::no);
}

TEST_CASE("the t = 1 graph")
{
    Graph g = case2_graph();
    CHECK(g.n() == 7);
    CHECK(g.edge_count() == 9);
    CHECK(g.degree(6) == 2);
    CHECK(g.neighbors(6) == std::vector<Vertex>{0, 3});
    CHECK(g.has_edge(1, 5));
}

TEST_CASE("the 1 < t < 3/2 graph")
{
    CHECK(case3_graph(6, 5).n() == 12);
    Graph h = case3_graph(4, 3);
    // V1 = {0,1}, y = {2,3,4}, z = {5,6,7}
    CHECK(h.neighbors(5) == std::vector<Vertex>{0, 1, 2, 6, 7});
    CHECK(h.neighbors(2) == std::vector<Vertex>{0, 1, 5});
    CHECK_THROWS_AS(case3_graph(3, 3), GraphError);
    CHECK_THROWS_AS(case3_graph(3, 1), GraphError);
}

TEST_CASE("Petersen graph and triangle inflation")
{
    Graph p = petersen();
    CHECK(p.n() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(girth(p) == 5);

    Graph ip = inflate_triangles(p);
    CHECK(ip.n() == 30);
    CHECK(ip.edge_count() == 45);
    for (Vertex v = 0; v < ip.n(); ++v)
        CHECK(ip.degree(v) == 3);
    CHECK(girth(ip) == 3);

    Graph k4 = inflate_triangles(complete_graph(4));
    CHECK(k4.n() == 12);
    CHECK(k4.edge_count() == 18);

    CHECK_THROWS_AS(inflate_triangles(cycle_graph(5)), GraphError);
}
