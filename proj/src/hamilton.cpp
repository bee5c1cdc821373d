#include "tough/oracles.hpp"

#include <algorithm>
#include <bit>

namespace tough {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
    }
    return "?";
}

std::string to_string(HamiltonMethod m)
{
    switch (m) {
    case HamiltonMethod::trivial: return "trivial";
    case HamiltonMethod::backtracking: return "backtracking";
    case HamiltonMethod::subset_dp: return "subset_dp";
    case HamiltonMethod::none: return "none";
    }
    return "?";
}

bool is_hamilton_cycle(const Graph& g, const std::vector<Vertex>& cycle)
{
    if (g.n() < 3 || static_cast<int>(cycle.size()) != g.n())
        return false;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Vertex v = cycle[i];
        if (v < 0 || v >= g.n() || seen[v]++)
            return false;
        if (!g.has_edge(v, cycle[(i + 1) % cycle.size()]))
            return false;
    }
    return true;
}

bool is_hamilton_path(const Graph& g, const std::vector<Vertex>& path, Vertex x, Vertex y)
{
    if (static_cast<int>(path.size()) != g.n() || path.empty() || path.front() != x || path.back() != y)
        return false;
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    for (std::size_t i = 0; i < path.size(); ++i) {
        Vertex v = path[i];
        if (v < 0 || v >= g.n() || seen[v]++)
            return false;
        if (i + 1 < path.size() && !g.has_edge(v, path[i + 1]))
            return false;
    }
    return true;
}

namespace {

struct BudgetExceeded {};

/// Extends a path from `start` one vertex at a time. With target < 0 the
/// path must close into a cycle through start; otherwise it must end at
/// target. Pruning: every unvisited vertex needs enough free neighbours
/// (2, or 1 for the target), a vertex whose free neighbours are exactly
/// the current end plus one more is taken next, and the unvisited vertices
/// must stay connected to the current end.
class Backtracker {
public:
    Backtracker(const Graph& g, Vertex start, Vertex target, long budget)
        : g_(g), n_(g.n()), start_(start), target_(target), budget_(budget),
          visited_(static_cast<std::size_t>(g.n()), 0)
    {
        for (Vertex v = 0; v < n_; ++v)
            nbrs_.push_back(g.neighbors(v));
    }

    HamiltonResult run()
    {
        HamiltonResult res;
        res.method = HamiltonMethod::backtracking;
        visited_[start_] = 1;
        path_.push_back(start_);
        try {
            res.verdict = extend(start_) ? Verdict::yes : Verdict::no;
        } catch (const BudgetExceeded&) {
            res.verdict = Verdict::unknown;
        }
        if (res.verdict == Verdict::yes)
            res.witness = path_;
        res.nodes = nodes_;
        return res;
    }

private:
    bool cycle_mode() const { return target_ < 0; }

    int free_neighbours(Vertex v, Vertex cur) const
    {
        int a = 0;
        for (Vertex u : nbrs_[v])
            if (!visited_[u] || u == cur || (cycle_mode() && u == start_))
                ++a;
        return a;
    }

    // Returns false on a dead end; sets `forced` when the next vertex is determined.
    bool feasible(Vertex cur, Vertex& forced) const
    {
        forced = -1;
        const int remaining = n_ - static_cast<int>(path_.size());
        const bool forcing = !cycle_mode() || cur != start_;
        int must_close = 0;
        for (Vertex v = 0; v < n_; ++v) {
            if (visited_[v])
                continue;
            const int need = v == target_ ? 1 : 2;
            const int a = free_neighbours(v, cur);
            if (a < need)
                return false;
            if (!forcing || a != need)
                continue;
            bool next_to_cur = g_.has_edge(v, cur);
            bool next_to_start = cycle_mode() && g_.has_edge(v, start_);
            if (next_to_start && ++must_close > 1)
                return false;
            if (next_to_cur) {
                if (v == target_ && remaining > 1)
                    return false;
                if (next_to_start && remaining > 1)
                    return false;
                if (forced >= 0)
                    return false;
                forced = v;
            }
        }
        // unvisited vertices must hang together with cur
        std::vector<char> reached(static_cast<std::size_t>(n_), 0);
        std::vector<Vertex> stack{cur};
        reached[cur] = 1;
        int count = 0;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : nbrs_[v])
                if (!visited_[u] && !reached[u]) {
                    reached[u] = 1;
                    ++count;
                    stack.push_back(u);
                }
        }
        return count == remaining;
    }

    bool extend(Vertex cur)
    {
        if (++nodes_ > budget_)
            throw BudgetExceeded{};
        const int remaining = n_ - static_cast<int>(path_.size());
        if (remaining == 0)
            return cycle_mode() ? (n_ >= 3 && g_.has_edge(cur, start_)) : cur == target_;

        Vertex forced;
        if (!feasible(cur, forced))
            return false;

        std::vector<std::pair<int, Vertex>> order;
        if (forced >= 0) {
            order.emplace_back(0, forced);
        } else {
            for (Vertex u : nbrs_[cur])
                if (!visited_[u] && (u != target_ || remaining == 1))
                    order.emplace_back(free_neighbours(u, cur), u);
            std::sort(order.begin(), order.end());
        }
        for (auto [_, u] : order) {
            visited_[u] = 1;
            path_.push_back(u);
            if (extend(u))
                return true;
            path_.pop_back();
            visited_[u] = 0;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    Vertex start_;
    Vertex target_;
    long budget_;
    long nodes_ = 0;
    std::vector<std::vector<Vertex>> nbrs_;
    std::vector<char> visited_;
    std::vector<Vertex> path_;
};

using Mask = std::uint64_t;

/// Held-Karp style reachability: reach[S] is the set of end vertices of
/// paths from `start` that visit exactly S.
HamiltonResult subset_dp(const Graph& g, Vertex start, Vertex target, int max_n)
{
    const int n = g.n();
    if (n > std::min(max_n, 28))
        throw OracleLimitError("subset DP: n=" + std::to_string(n) + " exceeds limit " + std::to_string(max_n));
    HamiltonResult res;
    res.method = HamiltonMethod::subset_dp;
    const auto adj = g.adjacency_masks();
    const Mask low = (Mask{1} << start) - 1;
    auto index = [&](Mask m) { return ((m >> (start + 1)) << start) | (m & low); };
    const Mask full = (Mask{1} << n) - 1;

    std::vector<std::uint32_t> reach(std::size_t{1} << (n - 1), 0);
    reach[index(Mask{1} << start)] = std::uint32_t{1} << start;
    for (Mask rest = 0; rest < (Mask{1} << (n - 1)); ++rest) {
        // rest enumerates the other n-1 vertices; expand back to a full mask
        Mask mask = ((rest >> start) << (start + 1)) | (rest & low) | (Mask{1} << start);
        std::uint32_t r = reach[rest];
        if (!r)
            continue;
        Mask next = 0;
        for (Mask q = r; q; q &= q - 1)
            next |= adj[std::countr_zero(q)];
        next &= ~mask;
        for (; next; next &= next - 1) {
            int u = std::countr_zero(next);
            reach[index(mask | (Mask{1} << u))] |= std::uint32_t{1} << u;
        }
        ++res.nodes;
    }

    Mask ends = reach[index(full)];
    if (target < 0)
        ends &= adj[start];
    else
        ends &= Mask{1} << target;
    if (n < 2 || (target < 0 && n < 3) || !ends) {
        res.verdict = Verdict::no;
        return res;
    }
    res.verdict = Verdict::yes;
    Vertex cur = std::countr_zero(ends);
    Mask mask = full;
    std::vector<Vertex> seq{cur};
    while (cur != start) {
        mask &= ~(Mask{1} << cur);
        Mask prev = reach[index(mask)] & adj[cur];
        cur = std::countr_zero(prev);
        seq.push_back(cur);
    }
    std::reverse(seq.begin(), seq.end());
    res.witness = std::move(seq);
    return res;
}

bool connected(const Graph& g)
{
    return g.n() == 0 || components(g).count == 1;
}

}  // namespace

HamiltonResult hamilton_cycle_backtracking(const Graph& g, long node_budget)
{
    if (g.n() < 3)
        return {Verdict::no, {}, HamiltonMethod::trivial, 0};
    return Backtracker(g, 0, -1, node_budget).run();
}

HamiltonResult hamilton_cycle_dp(const Graph& g, int max_n)
{
    if (g.n() < 3)
        return {Verdict::no, {}, HamiltonMethod::trivial, 0};
    return subset_dp(g, 0, -1, max_n);
}

HamiltonResult hamilton_path_backtracking(const Graph& g, Vertex x, Vertex y, long node_budget)
{
    if (x == y || x < 0 || y < 0 || x >= g.n() || y >= g.n())
        throw GraphError("Hamilton path needs two distinct vertices of the graph");
    return Backtracker(g, x, y, node_budget).run();
}

HamiltonResult hamilton_path_dp(const Graph& g, Vertex x, Vertex y, int max_n)
{
    if (x == y || x < 0 || y < 0 || x >= g.n() || y >= g.n())
        throw GraphError("Hamilton path needs two distinct vertices of the graph");
    return subset_dp(g, x, y, max_n);
}

namespace {

// The DP is cheap up to its limit, so backtracking only gets a short run
// there (enough to find most cycles quickly).
long backtrack_budget(const Graph& g, const HamiltonLimits& limits)
{
    constexpr long kShortRun = 200'000;
    return g.n() <= limits.dp_max_n ? std::min(limits.node_budget, kShortRun) : limits.node_budget;
}

}  // namespace

HamiltonResult is_hamiltonian(const Graph& g, const HamiltonLimits& limits)
{
    if (g.n() < 3 || !connected(g))
        return {Verdict::no, {}, HamiltonMethod::trivial, 0};
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) < 2)
            return {Verdict::no, {}, HamiltonMethod::trivial, 0};
    auto res = hamilton_cycle_backtracking(g, backtrack_budget(g, limits));
    if (res.verdict == Verdict::unknown && g.n() <= limits.dp_max_n)
        return hamilton_cycle_dp(g, limits.dp_max_n);
    return res;
}

HamiltonResult has_hamilton_path(const Graph& g, Vertex x, Vertex y, const HamiltonLimits& limits)
{
    if (x == y || x < 0 || y < 0 || x >= g.n() || y >= g.n())
        throw GraphError("Hamilton path needs two distinct vertices of the graph");
    if (!connected(g))
        return {Verdict::no, {}, HamiltonMethod::trivial, 0};
    auto res = hamilton_path_backtracking(g, x, y, backtrack_budget(g, limits));
    if (res.verdict == Verdict::unknown && g.n() <= limits.dp_max_n)
        return hamilton_path_dp(g, x, y, limits.dp_max_n);
    return res;
}

}  // namespace tough
