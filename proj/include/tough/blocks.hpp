#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tough/graph.hpp"

namespace tough {

enum class BlockKind { L1, L2, L3, L4 };

std::string to_string(BlockKind kind);
BlockKind parse_block_kind(std::string_view name);

/// A building-block graph with its two terminals.
///
/// Local numbering follows the w-index: w_i is vertex i-1. L2 merges w2 and
/// w8 into one vertex u that keeps w2's slot, so L2 reads
/// (w1, u, w3, w4, w5, w6, w7). Terminals are x = w1, y = w5 for L1-L3 and
/// x = w4, y = w5 for L4.
struct Block {
    Graph graph;
    Vertex x = 0;
    Vertex y = 0;
    BlockKind kind = BlockKind::L1;
};

Block block(BlockKind kind);

/// Vertices that a block contributes to the toughness cutset of the join
/// constructions: {w2,w4,w6,w8} for L1/L3, {u,w4,w6} for L2, {w1,w3} for L4.
std::vector<Vertex> block_cutset(BlockKind kind);

/// Blocks that admit no Hamilton x-y path (L1, L2, L3).
bool is_path_free(BlockKind kind);

struct TerminalGraph {
    Graph graph;
    std::vector<Edge> terminals;  ///< (x_i, y_i) in global numbering
    std::vector<int> offsets;     ///< first vertex of each block
};

/// Disjoint union of the blocks plus a clique on all 2m terminals.
TerminalGraph f_m(std::span<const BlockKind> kinds);

/// K_l joined with F_m. T occupies 0..l-1, then the blocks in list order.
Graph g_construct(int l, std::span<const BlockKind> kinds);

/// Parts 0..a-1 and a..a+b-1.
Graph complete_bipartite(int a, int b);

/// C6 on x1..x6 plus x7 adjacent to x1, x4 and the chord x2x6 (x_i = i-1).
Graph case2_graph();

/// V1 = 0..a-b (universal), V2 = y_1..y_b (independent), V3 = z_1..z_b (clique),
/// with y_i z_i edges. Requires a > b >= 2.
Graph case3_graph(int a, int b);

/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5-7-9-6-8-5.
Graph petersen();

/// Replaces every vertex v of a cubic graph by the triangle 3v, 3v+1, 3v+2.
/// Slot k of v's triangle carries v's k-th incident edge in sorted edge order.
Graph inflate_triangles(const Graph& cubic);

}  // namespace tough
