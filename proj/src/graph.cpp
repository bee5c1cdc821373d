#include "tough/graph.hpp"

#include <algorithm>
#include <bit>

namespace tough {

namespace {

int words_for(int n) { return (n + 63) / 64; }

}  // namespace

VertexSet::VertexSet(int n) : n_(n), words_(static_cast<std::size_t>(words_for(n)), 0)
{
    if (n < 0)
        throw GraphError("negative vertex count");
}

VertexSet::VertexSet(int n, std::span<const Vertex> members) : VertexSet(n)
{
    for (Vertex v : members)
        insert(v);
}

VertexSet::VertexSet(int n, std::initializer_list<Vertex> members)
    : VertexSet(n, std::span<const Vertex>(members.begin(), members.size()))
{
}

void VertexSet::check(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

void VertexSet::insert(Vertex v)
{
    check(v);
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v)
{
    check(v);
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

bool VertexSet::contains(Vertex v) const
{
    if (v < 0 || v >= n_)
        return false;
    return (words_[v / 64] >> (v % 64)) & 1;
}

int VertexSet::size() const
{
    int s = 0;
    for (auto w : words_)
        s += std::popcount(w);
    return s;
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < words_.size(); ++w)
        for (auto bits = words_[w]; bits; bits &= bits - 1)
            out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
    return out;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        return false;
    return (row(u)[v / 64] >> (v % 64)) & 1;
}

int Graph::degree(Vertex v) const
{
    int d = 0;
    for (auto w : row(v))
        d += std::popcount(w);
    return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const
{
    std::vector<Vertex> out;
    auto r = row(v);
    for (int w = 0; w < words_; ++w)
        for (auto bits = r[w]; bits; bits &= bits - 1)
            out.push_back(w * 64 + std::countr_zero(bits));
    return out;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

bool Graph::is_complete() const
{
    return 2L * edge_count_ == static_cast<long>(n_) * (n_ - 1);
}

std::vector<std::uint64_t> Graph::adjacency_masks() const
{
    if (n_ > 64)
        throw GraphError("adjacency masks need n <= 64");
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v)
        out[v] = row(v)[0];
    return out;
}

Graph make_graph(int n, std::span<const Edge> edges)
{
    if (n < 0)
        throw GraphError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.words_ = words_for(n);
    g.rows_.assign(static_cast<std::size_t>(n) * g.words_, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                             std::to_string(n));
        if (u == v)
            throw GraphError("loop at vertex " + std::to_string(u));
        if (g.has_edge(u, v))
            continue;
        g.rows_[static_cast<std::size_t>(u) * g.words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        g.rows_[static_cast<std::size_t>(v) * g.words_ + u / 64] |= std::uint64_t{1} << (u % 64);
        ++g.edge_count_;
    }
    return g;
}

Graph make_graph(int n, std::initializer_list<Edge> edges)
{
    return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Components components(const Graph& g, const VertexSet& removed)
{
    if (removed.universe() != g.n())
        throw GraphError("vertex set universe does not match graph order");
    const int n = g.n();
    const int words = g.words_per_row();
    Components out;
    out.label.assign(static_cast<std::size_t>(n), -1);

    std::vector<std::uint64_t> unseen(static_cast<std::size_t>(words), 0);
    auto rem = removed.words();
    for (int w = 0; w < words; ++w) {
        int hi = std::min(64, n - w * 64);
        std::uint64_t full = hi == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hi) - 1;
        unseen[w] = full & ~rem[w];
    }

    std::vector<std::uint64_t> frontier(static_cast<std::size_t>(words));
    for (int w = 0; w < words; ++w) {
        while (unseen[w]) {
            Vertex root = w * 64 + std::countr_zero(unseen[w]);
            std::vector<Vertex> part;
            std::fill(frontier.begin(), frontier.end(), 0);
            frontier[root / 64] |= std::uint64_t{1} << (root % 64);
            unseen[root / 64] &= ~(std::uint64_t{1} << (root % 64));
            bool grew = true;
            while (grew) {
                grew = false;
                std::vector<std::uint64_t> next(static_cast<std::size_t>(words), 0);
                for (int fw = 0; fw < words; ++fw)
                    for (auto bits = frontier[fw]; bits; bits &= bits - 1) {
                        Vertex v = fw * 64 + std::countr_zero(bits);
                        part.push_back(v);
                        auto r = g.row(v);
                        for (int k = 0; k < words; ++k)
                            next[k] |= r[k] & unseen[k];
                    }
                for (int k = 0; k < words; ++k) {
                    unseen[k] &= ~next[k];
                    grew |= next[k] != 0;
                }
                frontier.swap(next);
            }
            std::sort(part.begin(), part.end());
            for (Vertex v : part)
                out.label[v] = out.count;
            out.parts.push_back(std::move(part));
            ++out.count;
        }
    }
    return out;
}

Components components(const Graph& g)
{
    return components(g, VertexSet(g.n()));
}

Graph disjoint_union(std::span<const Graph> graphs)
{
    if (graphs.empty())
        throw GraphError("disjoint union of an empty list");
    int n = 0;
    std::vector<Edge> edges;
    for (const auto& g : graphs) {
        for (auto [u, v] : g.edges())
            edges.emplace_back(u + n, v + n);
        n += g.n();
    }
    return make_graph(n, edges);
}

Graph join(const Graph& g, const Graph& h)
{
    const int off = g.n();
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges())
        edges.emplace_back(u + off, v + off);
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = 0; v < h.n(); ++v)
            edges.emplace_back(u, v + off);
    return make_graph(g.n() + h.n(), edges);
}

Graph complete_graph(int n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return make_graph(n, edges);
}

Graph empty_graph(int n)
{
    return make_graph(n, std::span<const Edge>{});
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw GraphError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return make_graph(n, edges);
}

}  // namespace tough
