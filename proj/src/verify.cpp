#include "tough/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

namespace tough {

std::string to_string(ToughnessStatus s)
{
    switch (s) {
    case ToughnessStatus::oracle_exact: return "ORACLE_EXACT";
    case ToughnessStatus::witness_upper_bound_only: return "WITNESS_UPPER_BOUND_ONLY";
    case ToughnessStatus::failed: return "FAILED";
    }
    return "?";
}

std::string to_string(NonhamStatus s)
{
    switch (s) {
    case NonhamStatus::oracle_exhaustive: return "ORACLE_EXHAUSTIVE";
    case NonhamStatus::structural: return "STRUCTURAL";
    case NonhamStatus::failed: return "FAILED";
    }
    return "?";
}

bool VerificationReport::accepted() const
{
    return rejections.empty() && toughness != ToughnessStatus::failed && nonhamiltonicity != NonhamStatus::failed;
}

namespace {

class ReportBuilder {
public:
    explicit ReportBuilder(VerificationReport& r) : r_(r) {}

    // Runs one check; `body` returns a failure detail or an empty string.
    bool run(const std::string& name, const std::string& reason, const std::function<std::string()>& body)
    {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok;
        try {
            detail = body();
            ok = detail.empty();
        } catch (const std::exception& ex) {
            detail = ex.what();
            ok = false;
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        r_.checks.push_back({name, ok, ok ? "ok" : detail, ms});
        if (!ok && std::find(r_.rejections.begin(), r_.rejections.end(), reason) == r_.rejections.end())
            r_.rejections.push_back(reason);
        return ok;
    }

    void note(const std::string& name, const std::string& detail)
    {
        r_.checks.push_back({name, true, detail, 0});
    }

private:
    VerificationReport& r_;
};

// Two-colours g; returns the part sizes or nothing if g is not bipartite.
std::optional<std::pair<int, int>> bipartition(const Graph& g)
{
    std::vector<int> colour(static_cast<std::size_t>(g.n()), -1);
    int sizes[2] = {0, 0};
    for (Vertex s = 0; s < g.n(); ++s) {
        if (colour[s] >= 0)
            continue;
        colour[s] = 0;
        ++sizes[0];
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : g.neighbors(v)) {
                if (colour[u] < 0) {
                    colour[u] = 1 - colour[v];
                    ++sizes[colour[u]];
                    stack.push_back(u);
                } else if (colour[u] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::pair{std::min(sizes[0], sizes[1]), std::max(sizes[0], sizes[1])};
}

}  // namespace

VerificationReport check_certificate(const Graph& g, const Certificate& c, const VerifyLimits& limits)
{
    VerificationReport r;
    ReportBuilder rb(r);
    const SynthesisPlan& p = c.plan;

    bool plan_ok = rb.run("plan", "plan_mismatch", [&]() -> std::string {
        SynthesisPlan expected = plan(p.target);
        if (!(expected == p))
            return "certificate plan differs from the plan derived from t=" + p.target.str();
        return {};
    });

    bool rebuilt = plan_ok && rb.run("rebuild", "rebuild_mismatch", [&]() -> std::string {
        if (!(build_graph(p) == g))
            return "graph differs from the construction rebuilt from the plan";
        return {};
    });

    rb.run("predicted_tau", "predicted_mismatch", [&]() -> std::string {
        if (c.predicted_tau != p.target)
            return "predicted_tau " + c.predicted_tau.str() + " differs from t=" + p.target.str();
        if (plan_ok && predicted_toughness(p) != c.predicted_tau)
            return "governing formula gives " + predicted_toughness(p).str();
        return {};
    });

    bool witness_ok = rb.run("cutset_witness", "witness_invalid", [&]() -> std::string {
        for (Vertex v : c.witness.cutset)
            if (v < 0 || v >= g.n())
                return "cutset vertex " + std::to_string(v) + " out of range";
        auto w = make_witness(g, c.witness.cutset);
        if (w.cutset.size() != c.witness.cutset.size())
            return "cutset has repeated vertices";
        if (w.component_count != c.witness.component_count)
            return "cutset leaves " + std::to_string(w.component_count) + " components, certificate says " +
                   std::to_string(c.witness.component_count);
        return {};
    });
    if (witness_ok)
        rb.run("cutset_ratio", "witness_ratio_mismatch", [&]() -> std::string {
            Rational ratio(static_cast<std::int64_t>(c.witness.cutset.size()), c.witness.component_count);
            if (ratio != c.predicted_tau || ratio != p.target)
                return "cutset ratio " + ratio.str() + " differs from predicted " + c.predicted_tau.str();
            return {};
        });

    // nonhamiltonicity by the certificate's argument
    bool structural_ok = false;
    bool exhaustive_done = false;
    const auto& arg = c.nonhamiltonicity;
    structural_ok = rb.run("nonham_" + to_string(arg.kind), "structural_predicate_false", [&]() -> std::string {
        if (!plan_ok || !rebuilt)
            return "argument depends on the rebuilt construction";
        if (!(arg == nonham_argument(p)))
            return "argument parameters differ from those of the plan";
        switch (arg.kind) {
        case NonhamKind::bipartite_imbalance: {
            auto parts = bipartition(g);
            if (!parts)
                return "graph is not bipartite";
            if (parts->first != arg.params.at("small_side") || parts->second != arg.params.at("large_side"))
                return "bipartition sizes differ from the certificate";
            if (2 * parts->second <= g.n())
                return "larger side does not exceed n/2";
            if (g.n() <= limits.alpha_max_n) {
                r.alpha = independence_number(g, limits.alpha_max_n);
                if (*r.alpha != parts->second)
                    return "independence number " + std::to_string(*r.alpha) + " differs from the larger side";
            }
            return {};
        }
        case NonhamKind::edge_count: {
            auto lhs = arg.params.at("lhs"), rhs = arg.params.at("rhs");
            if (!(lhs > rhs))
                return "edge-count inequality " + std::to_string(lhs) + " > " + std::to_string(rhs) + " is false";
            return {};
        }
        case NonhamKind::block_count: {
            std::set<BlockKind> kinds(p.blocks.begin(), p.blocks.end());
            int path_free = 0;
            for (BlockKind k : kinds) {
                Block b = block(k);
                auto res = has_hamilton_path(b.graph, b.x, b.y, limits.hamilton);
                if (res.verdict == Verdict::unknown)
                    return "Hamilton path search inconclusive for " + to_string(k);
                if (res.verdict == Verdict::no)
                    path_free += static_cast<int>(std::count(p.blocks.begin(), p.blocks.end(), k));
                rb.note("block_" + to_string(k), res.verdict == Verdict::no ? "no Hamilton x-y path (exhaustive)"
                                                                            : "has a Hamilton x-y path");
            }
            if (path_free != arg.params.at("path_free_blocks"))
                return "counted " + std::to_string(path_free) + " path-free blocks";
            if (path_free < 2 * p.l + 1)
                return std::to_string(path_free) + " path-free blocks < 2l+1 = " + std::to_string(2 * p.l + 1);
            return {};
        }
        case NonhamKind::exhaustive: {
            if (g.n() > 64)
                return "exhaustive refutation needs n <= 64";
            auto res = is_hamiltonian(g, limits.hamilton);
            if (res.verdict == Verdict::yes)
                return "graph has a Hamilton cycle";
            if (res.verdict == Verdict::unknown)
                return "Hamiltonicity search inconclusive";
            exhaustive_done = true;
            return {};
        }
        }
        return "unhandled argument";
    });

    if (structural_ok && !exhaustive_done && g.n() <= limits.max_oracle_n) {
        auto res = is_hamiltonian(g, limits.hamilton);
        if (res.verdict == Verdict::yes) {
            rb.run("nonham_oracle", "oracle_contradiction", [] { return std::string("oracle found a Hamilton cycle"); });
            structural_ok = false;
        } else if (res.verdict == Verdict::no) {
            exhaustive_done = true;
            rb.note("nonham_oracle", "exhaustive refutation by " + to_string(res.method));
        }
    }
    r.nonhamiltonicity = !structural_ok ? NonhamStatus::failed
                         : exhaustive_done ? NonhamStatus::oracle_exhaustive
                                           : NonhamStatus::structural;

    const bool upper_ok = r.rejections.empty();
    if (!upper_ok) {
        r.toughness = ToughnessStatus::failed;
    } else if (g.n() <= limits.max_oracle_n) {
        bool exact = rb.run("toughness_oracle", "oracle_contradiction", [&]() -> std::string {
            auto res = toughness_exact(g, limits.max_oracle_n);
            if (res.infinite)
                return "oracle reports a complete graph";
            if (res.value != c.predicted_tau)
                return "exact toughness " + res.value.str() + " differs from predicted " + c.predicted_tau.str();
            return {};
        });
        r.toughness = exact ? ToughnessStatus::oracle_exact : ToughnessStatus::failed;
    } else {
        r.toughness = ToughnessStatus::witness_upper_bound_only;
        rb.note("toughness_oracle", "skipped: n=" + std::to_string(g.n()) + " above limit " +
                                        std::to_string(limits.max_oracle_n) + "; lower bound not checked");
    }
    return r;
}

nlohmann::json to_json(const VerificationReport& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {
        {"accepted", r.accepted()},
        {"toughness_status", to_string(r.toughness)},
        {"nonhamiltonicity_status", to_string(r.nonhamiltonicity)},
        {"alpha", r.alpha ? nlohmann::json(*r.alpha) : nlohmann::json(nullptr)},
        {"checks", checks},
        {"rejections", r.rejections},
    };
}

FormulaCheck check_formula_instance(const FormulaInstance& c, int max_n)
{
    if (!formula_hypotheses_hold(c))
        throw SynthesisError("parameters outside the hypotheses of " + to_string(c.formula));
    Graph g = g_construct(c.l, formula_blocks(c));
    auto res = toughness_exact(g, max_n);
    FormulaCheck out;
    out.n = g.n();
    out.predicted = formula_value(c);
    if (res.infinite)
        return out;
    out.oracle = res.value;
    out.passed = out.oracle == out.predicted;
    return out;
}

}  // namespace tough
