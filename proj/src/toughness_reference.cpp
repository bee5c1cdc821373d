#include "tough/oracles.hpp"

#include <numeric>

namespace tough {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int v)
    {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace

ToughnessResult toughness_reference(const Graph& g, int max_n)
{
    if (g.is_complete())
        return {true, {}, std::nullopt};
    const int n = g.n();
    if (n > max_n || n > 30)
        throw OracleLimitError("toughness_reference: n=" + std::to_string(n) + " exceeds limit");

    const auto edges = g.edges();
    std::optional<CutsetWitness> best;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        auto removed = [&](int v) { return (s >> v) & 1; };
        int size = 0, alive = 0;
        for (int v = 0; v < n; ++v)
            removed(v) ? ++size : ++alive;
        DisjointSets ds(n);
        int w = alive;
        for (auto [u, v] : edges)
            if (!removed(u) && !removed(v) && ds.unite(u, v))
                --w;
        if (w < 2)
            continue;
        Rational r(size, w);
        if (!best || r < best->ratio) {
            std::vector<Vertex> members;
            for (int v = 0; v < n; ++v)
                if (removed(v))
                    members.push_back(v);
            best = CutsetWitness{std::move(members), w, r};
        }
    }
    return {false, best->ratio, best};
}

}  // namespace tough
