#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tough {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Subset of 0..n-1, stored as a bitset.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n);
    VertexSet(int n, std::span<const Vertex> members);
    VertexSet(int n, std::initializer_list<Vertex> members);

    int universe() const { return n_; }
    void insert(Vertex v);
    void erase(Vertex v);
    bool contains(Vertex v) const;
    int size() const;
    bool empty() const { return size() == 0; }
    std::vector<Vertex> members() const;
    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void check(Vertex v) const;

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1. Adjacency is kept
/// as one bitset row per vertex.
class Graph {
public:
    Graph() = default;

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }
    int words_per_row() const { return words_; }

    bool has_edge(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;
    std::span<const std::uint64_t> row(Vertex v) const
    {
        return {rows_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }

    /// Edges with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;
    bool is_complete() const;

    /// Single-word adjacency rows; only valid for n <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph make_graph(int n, std::span<const Edge> edges);

    int n_ = 0;
    int words_ = 0;
    int edge_count_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// Rejects out-of-range endpoints and loops; duplicate pairs collapse.
Graph make_graph(int n, std::span<const Edge> edges);
Graph make_graph(int n, std::initializer_list<Edge> edges);

struct Components {
    int count = 0;
    /// Component index per vertex, -1 for removed vertices. Components are
    /// numbered in order of their smallest vertex.
    std::vector<int> label;
    std::vector<std::vector<Vertex>> parts;
};

/// Connected components of g with `removed` deleted.
Components components(const Graph& g, const VertexSet& removed);
Components components(const Graph& g);

/// Block i occupies ids [offset_i, offset_i + n_i).
Graph disjoint_union(std::span<const Graph> graphs);
/// g's vertices keep their ids, h's are shifted by g.n().
Graph join(const Graph& g, const Graph& h);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);

}  // namespace tough
