#include "tough/oracles.hpp"

#include <bit>

namespace tough {

namespace {

using Mask = std::uint64_t;

struct MisSearch {
    const std::vector<Mask>& adj;
    int best = 0;

    void run(Mask p, int taken)
    {
        if (!p) {
            best = std::max(best, taken);
            return;
        }
        if (taken + std::popcount(p) <= best)
            return;
        // a vertex of degree <= 1 inside p can always be taken
        int pick = -1, pick_deg = 64, hub = -1, hub_deg = -1;
        for (Mask q = p; q; q &= q - 1) {
            int v = std::countr_zero(q);
            int d = std::popcount(adj[v] & p);
            if (d < pick_deg) {
                pick = v;
                pick_deg = d;
            }
            if (d > hub_deg) {
                hub = v;
                hub_deg = d;
            }
        }
        if (pick_deg <= 1) {
            run(p & ~adj[pick] & ~(Mask{1} << pick), taken + 1);
            return;
        }
        run(p & ~adj[hub] & ~(Mask{1} << hub), taken + 1);
        run(p & ~(Mask{1} << hub), taken);
    }
};

}  // namespace

int independence_number(const Graph& g, int max_n)
{
    if (g.n() > max_n || g.n() > 64)
        throw OracleLimitError("independence_number: n=" + std::to_string(g.n()) + " exceeds limit " +
                               std::to_string(std::min(max_n, 64)));
    if (g.n() == 0)
        return 0;
    auto adj = g.adjacency_masks();
    MisSearch search{adj};
    Mask all = g.n() == 64 ? ~Mask{0} : (Mask{1} << g.n()) - 1;
    search.run(all, 0);
    return search.best;
}

}  // namespace tough
