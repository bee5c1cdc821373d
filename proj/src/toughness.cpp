#include "tough/oracles.hpp"

#include <algorithm>
#include <bit>

#include <omp.h>

namespace tough {

namespace {

using Mask = std::uint64_t;

int count_components(const std::vector<Mask>& adj, Mask alive)
{
    int count = 0;
    while (alive) {
        Mask comp = alive & -alive;
        Mask frontier = comp;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1)
                next |= adj[std::countr_zero(f)];
            frontier = next & alive & ~comp;
            comp |= frontier;
        }
        alive &= ~comp;
        ++count;
    }
    return count;
}

// C(n, k) for n <= 64; saturates well above anything enumerable.
std::vector<std::vector<std::uint64_t>> binomials(int n)
{
    std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(n + 1),
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
    for (int i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
    }
    return c;
}

// The rank-th k-subset in colex order, which is also increasing mask order.
Mask unrank_colex(std::uint64_t rank, int k, const std::vector<std::vector<std::uint64_t>>& c)
{
    Mask mask = 0;
    for (int j = k; j >= 1; --j) {
        int pos = j - 1;
        while (pos + 1 < static_cast<int>(c.size()) && c[pos + 1][j] <= rank)
            ++pos;
        rank -= c[pos][j];
        mask |= Mask{1} << pos;
    }
    return mask;
}

Mask next_same_popcount(Mask v)
{
    Mask t = v | (v - 1);
    return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

struct LayerBest {
    int components = 0;
    Mask mask = 0;
};

LayerBest scan_layer(const std::vector<Mask>& adj, int n, int k, const std::vector<std::vector<std::uint64_t>>& c)
{
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    const std::uint64_t total = c[n][k];
    constexpr std::uint64_t kChunk = 1 << 12;
    const auto chunks = static_cast<long>((total + kChunk - 1) / kChunk);
    std::vector<LayerBest> results(static_cast<std::size_t>(chunks));

#pragma omp parallel for schedule(dynamic, 4)
    for (long ci = 0; ci < chunks; ++ci) {
        std::uint64_t begin = static_cast<std::uint64_t>(ci) * kChunk;
        std::uint64_t end = std::min(total, begin + kChunk);
        Mask s = unrank_colex(begin, k, c);
        LayerBest best;
        for (std::uint64_t r = begin; r < end; ++r) {
            int w = count_components(adj, all & ~s);
            if (w > best.components) {
                best.components = w;
                best.mask = s;
            }
            if (k > 0 && r + 1 < end)
                s = next_same_popcount(s);
        }
        results[static_cast<std::size_t>(ci)] = best;
    }

    LayerBest best;
    for (const auto& r : results)
        if (r.components > best.components)
            best = r;
    return best;
}

std::vector<Vertex> mask_members(Mask m)
{
    std::vector<Vertex> out;
    for (; m; m &= m - 1)
        out.push_back(std::countr_zero(m));
    return out;
}

}  // namespace

CutsetWitness make_witness(const Graph& g, std::vector<Vertex> cutset)
{
    std::sort(cutset.begin(), cutset.end());
    if (std::adjacent_find(cutset.begin(), cutset.end()) != cutset.end())
        throw GraphError("cutset has repeated vertices");
    VertexSet s(g.n(), cutset);
    int w = components(g, s).count;
    if (w < 2)
        throw GraphError("cutset leaves " + std::to_string(w) + " component(s), need at least 2");
    return {std::move(cutset), w, Rational(static_cast<std::int64_t>(s.size()), w)};
}

ToughnessResult toughness_exact(const Graph& g, int max_n)
{
    if (g.is_complete())
        return {true, {}, std::nullopt};
    const int n = g.n();
    if (n > max_n || n > 64)
        throw OracleLimitError("toughness_exact: n=" + std::to_string(n) + " exceeds limit " +
                               std::to_string(std::min(max_n, 64)) +
                               "; use the heuristic search or structural verification");

    const auto adj = g.adjacency_masks();
    const int alpha = independence_number(g);
    const auto c = binomials(n);

    std::optional<Rational> best;
    Mask best_mask = 0;
    int best_w = 0;
    for (int k = 0; k <= n - 2; ++k) {
        int cap = std::min(n - k, alpha);
        if (best && Rational(k, cap) >= *best)
            break;
        LayerBest layer = scan_layer(adj, n, k, c);
        if (layer.components < 2)
            continue;
        Rational r(k, layer.components);
        if (!best || r < *best) {
            best = r;
            best_mask = layer.mask;
            best_w = layer.components;
        }
    }
    // a noncomplete graph always has a separating set, so best is set
    return {false, *best, CutsetWitness{mask_members(best_mask), best_w, *best}};
}

}  // namespace tough
