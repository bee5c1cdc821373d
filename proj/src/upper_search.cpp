#include "tough/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace tough {

namespace {

class CutsetSearch {
public:
    CutsetSearch(const Graph& g, long budget) : g_(g), budget_(budget)
    {
        for (Vertex v = 0; v < g.n(); ++v)
            nbrs_.push_back(g.neighbors(v));
    }

    bool exhausted() const { return spent_ >= budget_; }
    const std::optional<CutsetWitness>& best() const { return best_; }

    // Drops cutset vertices that touch at most one component, which never
    // raises the ratio, then records the result.
    VertexSet tighten(VertexSet s)
    {
        bool changed = true;
        while (changed && !exhausted()) {
            changed = false;
            auto comp = count(s);
            for (Vertex v : s.members()) {
                int first = -1;
                bool touches_two = false;
                for (Vertex u : nbrs_[v]) {
                    int c = comp.label[u];
                    if (c < 0)
                        continue;
                    if (first < 0)
                        first = c;
                    else if (c != first) {
                        touches_two = true;
                        break;
                    }
                }
                if (!touches_two) {
                    s.erase(v);
                    changed = true;
                    break;
                }
            }
        }
        record(s);
        return s;
    }

    // Greedy descent: add a vertex, re-tighten, keep it if the ratio drops.
    void descend(VertexSet s)
    {
        s = tighten(std::move(s));
        bool improved = true;
        while (improved && !exhausted()) {
            improved = false;
            auto current = ratio_of(s);
            for (Vertex v = 0; v < g_.n() && !exhausted(); ++v) {
                if (s.contains(v))
                    continue;
                VertexSet t = s;
                t.insert(v);
                t = tighten(std::move(t));
                auto r = ratio_of(t);
                if (r && (!current || *r < *current)) {
                    s = std::move(t);
                    improved = true;
                    break;
                }
            }
        }
    }

private:
    Components count(const VertexSet& s)
    {
        ++spent_;
        return components(g_, s);
    }

    std::optional<Rational> ratio_of(const VertexSet& s)
    {
        auto c = count(s);
        if (c.count < 2)
            return std::nullopt;
        return Rational(s.size(), c.count);
    }

    void record(const VertexSet& s)
    {
        auto c = count(s);
        if (c.count < 2)
            return;
        Rational r(s.size(), c.count);
        if (!best_ || r < best_->ratio)
            best_ = CutsetWitness{s.members(), c.count, r};
    }

    const Graph& g_;
    long budget_;
    long spent_ = 0;
    std::vector<std::vector<Vertex>> nbrs_;
    std::optional<CutsetWitness> best_;
};

VertexSet complement_of_greedy_independent(const Graph& g, const std::vector<Vertex>& order)
{
    VertexSet s(g.n());
    std::vector<char> blocked(static_cast<std::size_t>(g.n()), 0);
    for (Vertex v : order) {
        if (blocked[v]) {
            s.insert(v);
            continue;
        }
        for (Vertex u : g.neighbors(v))
            blocked[u] = 1;
    }
    return s;
}

}  // namespace

std::optional<CutsetWitness> toughness_upper_search(const Graph& g, long budget, std::uint64_t seed)
{
    if (g.n() < 3 || g.is_complete())
        return std::nullopt;
    if (components(g).count >= 2)
        return CutsetWitness{{}, components(g).count, Rational(0)};

    CutsetSearch search(g, budget);
    std::vector<Vertex> by_degree(static_cast<std::size_t>(g.n()));
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });

    // neighbourhoods isolate one vertex each
    for (Vertex v : by_degree) {
        if (search.exhausted())
            break;
        if (g.degree(v) == g.n() - 1)
            continue;
        auto nv = g.neighbors(v);
        search.tighten(VertexSet(g.n(), nv));
    }

    search.descend(complement_of_greedy_independent(g, by_degree));

    std::mt19937_64 rng(seed);
    std::vector<Vertex> order = by_degree;
    while (!search.exhausted()) {
        std::shuffle(order.begin(), order.end(), rng);
        search.descend(complement_of_greedy_independent(g, order));
    }
    return search.best();
}

}  // namespace tough
