#include "tough/synth.hpp"

#include <algorithm>
#include <functional>

namespace tough {

std::string to_string(CaseId id)
{
    switch (id) {
    case CaseId::c1: return "1";
    case CaseId::c2: return "2";
    case CaseId::c3: return "3";
    case CaseId::c4: return "4";
    case CaseId::c5_1: return "5.1";
    case CaseId::c5_2: return "5.2";
    case CaseId::c6_1: return "6.1";
    case CaseId::c6_2: return "6.2";
    case CaseId::c7_1: return "7.1";
    case CaseId::c7_2: return "7.2";
    }
    return "?";
}

CaseId parse_case_id(const std::string& text)
{
    for (auto id : {CaseId::c1, CaseId::c2, CaseId::c3, CaseId::c4, CaseId::c5_1, CaseId::c5_2, CaseId::c6_1,
                    CaseId::c6_2, CaseId::c7_1, CaseId::c7_2})
        if (to_string(id) == text)
            return id;
    throw SynthesisError("unknown case id '" + text + "'");
}

std::string to_string(Formula f)
{
    switch (f) {
    case Formula::l2: return "l2";
    case Formula::l2_l3: return "l2_l3";
    case Formula::l1_l2: return "l1_l2";
    case Formula::l1_l2_l3: return "l1_l2_l3";
    case Formula::l1_l4: return "l1_l4";
    case Formula::l1: return "l1";
    }
    return "?";
}

std::string to_string(NonhamKind k)
{
    switch (k) {
    case NonhamKind::bipartite_imbalance: return "BIPARTITE_IMBALANCE";
    case NonhamKind::exhaustive: return "EXHAUSTIVE";
    case NonhamKind::edge_count: return "EDGE_COUNT";
    case NonhamKind::block_count: return "BLOCK_COUNT";
    }
    return "?";
}

NonhamKind parse_nonham_kind(const std::string& text)
{
    for (auto k : {NonhamKind::bipartite_imbalance, NonhamKind::exhaustive, NonhamKind::edge_count,
                   NonhamKind::block_count})
        if (to_string(k) == text)
            return k;
    throw SynthesisError("unknown nonhamiltonicity kind '" + text + "'");
}

namespace {

std::vector<BlockKind> repeat(BlockKind kind, int count)
{
    return std::vector<BlockKind>(static_cast<std::size_t>(std::max(count, 0)), kind);
}

void append(std::vector<BlockKind>& out, const std::vector<BlockKind>& more)
{
    out.insert(out.end(), more.begin(), more.end());
}

int path_free_count(const std::vector<BlockKind>& blocks)
{
    return static_cast<int>(std::count_if(blocks.begin(), blocks.end(), is_path_free));
}

constexpr std::int64_t kMaxQ = 100'000'000;

/// Smallest q (odd only when requested) with accept(a*q, b*q).
std::int64_t smallest_q(const Rational& t, bool odd_only,
                        const std::function<bool(std::int64_t, std::int64_t)>& accept)
{
    for (std::int64_t q = 1; q <= kMaxQ; q += odd_only ? 2 : 1)
        if (accept(t.num() * q, t.den() * q))
            return q;
    throw SynthesisError("no scaling factor q <= " + std::to_string(kMaxQ) + " satisfies the side conditions for t=" +
                         t.str());
}

bool mixed_case(CaseId id)
{
    return id == CaseId::c6_1 || id == CaseId::c6_2;
}

int to_int(std::int64_t v, const char* what)
{
    if (v < INT32_MIN || v > INT32_MAX)
        throw SynthesisError(std::string(what) + " too large");
    return static_cast<int>(v);
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw SynthesisError("plan check failed: " + what);
}

}  // namespace

Rational formula_value(const FormulaInstance& c)
{
    const std::int64_t l = c.l, m = c.m, m2 = c.m2;
    switch (c.formula) {
    case Formula::l2: return Rational(l + 3 * m, 2 * m + 1);
    case Formula::l2_l3: return Rational(l + 3 * m + 1, 2 * (m + 1));
    case Formula::l1_l2: return Rational(l + 3 * m2, 2 * m2 + 1);
    case Formula::l1_l2_l3: return Rational(l + 3 * m2 + 1, 2 * (m2 + 1));
    case Formula::l1_l4: return Rational(l + 4 * m - 2, 2 * m);
    case Formula::l1: return Rational(l + 4 * m, 2 * m + 1);
    }
    throw SynthesisError("bad formula");
}

std::vector<BlockKind> formula_blocks(const FormulaInstance& c)
{
    std::vector<BlockKind> out;
    switch (c.formula) {
    case Formula::l2:
        return repeat(BlockKind::L2, c.m);
    case Formula::l2_l3:
        out = repeat(BlockKind::L2, c.m - 1);
        out.push_back(BlockKind::L3);
        return out;
    case Formula::l1_l2:
        out = repeat(BlockKind::L1, c.m1);
        append(out, repeat(BlockKind::L2, c.m2));
        return out;
    case Formula::l1_l2_l3:
        out = repeat(BlockKind::L1, c.m1);
        append(out, repeat(BlockKind::L2, c.m2 - 1));
        out.push_back(BlockKind::L3);
        return out;
    case Formula::l1_l4:
        out = repeat(BlockKind::L1, c.m - 1);
        out.push_back(BlockKind::L4);
        return out;
    case Formula::l1:
        return repeat(BlockKind::L1, c.m);
    }
    return out;
}

bool formula_hypotheses_hold(const FormulaInstance& c)
{
    switch (c.formula) {
    case Formula::l2:
    case Formula::l2_l3:
    case Formula::l1_l4:
    case Formula::l1:
        return c.l >= 2 && c.m >= 1;
    case Formula::l1_l2:
        return c.l >= 2 && c.m1 >= 0 && c.m2 >= 0 && c.m1 + c.m2 >= 1 && c.m2 >= c.l - 2;
    case Formula::l1_l2_l3:
        return c.l >= 2 && c.m1 >= 0 && c.m2 >= 1 && c.m2 >= c.l - 2;
    }
    return false;
}

std::optional<FormulaInstance> governing_instance(const SynthesisPlan& p)
{
    switch (p.case_id) {
    case CaseId::c5_1: return FormulaInstance{Formula::l2, p.l, p.m};
    case CaseId::c5_2: return FormulaInstance{Formula::l2_l3, p.l, p.m};
    case CaseId::c6_1: return FormulaInstance{Formula::l1_l2, p.l, p.m, p.m1.value_or(0), p.m2.value_or(0)};
    case CaseId::c6_2: return FormulaInstance{Formula::l1_l2_l3, p.l, p.m, p.m1.value_or(0), p.m2.value_or(0)};
    case CaseId::c7_1: return FormulaInstance{Formula::l1, p.l, p.m};
    case CaseId::c7_2: return FormulaInstance{Formula::l1_l4, p.l, p.m};
    default: return std::nullopt;
    }
}

Rational predicted_toughness(const SynthesisPlan& p)
{
    const std::int64_t a = p.a_scaled, b = p.b_scaled;
    switch (p.case_id) {
    case CaseId::c1:
        return Rational(a, b);
    case CaseId::c2:
        return Rational(1);
    case CaseId::c3: {
        // min over the number k of clique vertices cut away, 1 <= k <= b-1
        std::optional<Rational> best;
        for (std::int64_t k = 1; k <= b - 1; ++k) {
            Rational r(k + a - b + 1, k + 1);
            if (!best || r < *best)
                best = r;
        }
        if (!best)
            throw SynthesisError("case 3 needs b >= 2");
        return *best;
    }
    case CaseId::c4:
        return Rational(3, 2);
    default:
        return formula_value(*governing_instance(p));
    }
}

void check_plan(const SynthesisPlan& p)
{
    const Rational& t = p.target;
    require(t > Rational(0) && t < Rational(9, 4), "target inside (0, 9/4)");
    require(p.q >= 1, "q >= 1");
    require(p.a_scaled == t.num() * p.q && p.b_scaled == t.den() * p.q, "a_scaled/b_scaled = t with factor q");
    const std::int64_t as = p.a_scaled, bs = p.b_scaled;

    switch (p.case_id) {
    case CaseId::c1:
        require(t < Rational(1) && p.q == 1, "case 1 covers t < 1 unscaled");
        break;
    case CaseId::c2:
        require(t == Rational(1) && p.q == 1, "case 2 is t = 1");
        break;
    case CaseId::c3:
        require(t > Rational(1) && t < Rational(3, 2), "case 3 covers 1 < t < 3/2");
        require(bs >= 2 && as > bs, "a_scaled > b_scaled >= 2");
        require(2 * as < 3 * bs - 2, "edge-count inequality 2b > 2a - b + 2");
        break;
    case CaseId::c4:
        require(t == Rational(3, 2) && p.q == 1, "case 4 is t = 3/2");
        break;
    default: {
        const bool odd = p.case_id == CaseId::c5_1 || p.case_id == CaseId::c6_1 || p.case_id == CaseId::c7_1;
        require((bs % 2 == 1) == odd, "scaled denominator parity matches the subcase");
        require(p.l >= 2, "l >= 2");
        require(p.m >= 1, "m >= 1");
        require(static_cast<int>(p.blocks.size()) == p.m, "block list length is m");
        require(path_free_count(p.blocks) >= 2 * p.l + 1, "at least 2l+1 blocks without a Hamilton x-y path");
        const bool mixed = p.case_id == CaseId::c6_1 || p.case_id == CaseId::c6_2;
        require(mixed == (p.m1.has_value() && p.m2.has_value()), "m1/m2 present exactly for case 6");
        if (mixed) {
            require(*p.m1 >= 1 && *p.m1 + *p.m2 == p.m, "m = m1 + m2 with m1 >= 1");
            require(*p.m2 >= p.l - 2, "m2 >= l - 2");
        }
        break;
    }
    }
    switch (p.case_id) {
    case CaseId::c5_1: require(t > Rational(3, 2) && t < Rational(7, 4), "case 5 range"); break;
    case CaseId::c5_2: require(t > Rational(3, 2) && t < Rational(7, 4), "case 5 range"); break;
    case CaseId::c6_1: require(t >= Rational(7, 4) && t <= Rational(2), "case 6 range"); break;
    case CaseId::c6_2: require(t >= Rational(7, 4) && t <= Rational(2), "case 6 range"); break;
    case CaseId::c7_1: require(t > Rational(2), "case 7 range"); break;
    case CaseId::c7_2: require(t > Rational(2), "case 7 range"); break;
    default: break;
    }
    if (auto inst = governing_instance(p)) {
        require(formula_hypotheses_hold(*inst), "hypotheses of the governing formula");
        require(p.blocks == formula_blocks(*inst), "block layout matches the governing formula");
    } else {
        require(p.l == 0 && p.m == 0 && p.blocks.empty() && !p.m1 && !p.m2, "no join parameters outside cases 5-7");
    }
    require(predicted_toughness(p) == t, "predicted toughness equals t");
}

SynthesisPlan plan(const Rational& t)
{
    if (!(t > Rational(0) && t < Rational(9, 4)))
        throw SynthesisError("t must satisfy 0 < t < 9/4 (got " + t.str() + ")");
    SynthesisPlan p;
    p.target = t;
    const std::int64_t b = t.den();
    const bool b_odd = b % 2 == 1;

    auto scale = [&](std::int64_t q) {
        p.q = q;
        p.a_scaled = t.num() * q;
        p.b_scaled = t.den() * q;
    };
    auto any_q = [&](auto accept) { scale(smallest_q(t, false, accept)); };
    auto odd_q = [&](auto accept) { scale(smallest_q(t, true, accept)); };

    if (t < Rational(1)) {
        p.case_id = CaseId::c1;
        scale(1);
    } else if (t == Rational(1)) {
        p.case_id = CaseId::c2;
        scale(1);
    } else if (t < Rational(3, 2)) {
        p.case_id = CaseId::c3;
        any_q([](std::int64_t as, std::int64_t bs) { return 2 * as < 3 * bs - 2; });
    } else if (t == Rational(3, 2)) {
        p.case_id = CaseId::c4;
        scale(1);
    } else if (t < Rational(7, 4)) {
        if (b_odd) {
            p.case_id = CaseId::c5_1;
            odd_q([](std::int64_t as, std::int64_t bs) { return 4 * as <= 7 * bs - 9 && 2 * as >= 3 * bs + 1; });
            p.l = to_int(p.a_scaled - 3 * (p.b_scaled - 1) / 2, "l");
            p.m = to_int((p.b_scaled - 1) / 2, "m");
            p.blocks = formula_blocks({Formula::l2, p.l, p.m});
        } else {
            p.case_id = CaseId::c5_2;
            any_q([](std::int64_t as, std::int64_t bs) { return 4 * as <= 7 * bs - 12; });
            p.l = to_int(p.a_scaled - 3 * p.b_scaled / 2 + 2, "l");
            p.m = to_int(p.b_scaled / 2 - 1, "m");
            p.blocks = formula_blocks({Formula::l2_l3, p.l, p.m});
        }
    } else if (t <= Rational(2)) {
        int m2 = 0;
        FormulaInstance inst;
        if (b_odd) {
            p.case_id = CaseId::c6_1;
            odd_q([](std::int64_t as, std::int64_t bs) { return 2 * as >= 3 * bs + 1; });
            p.l = to_int(p.a_scaled - 3 * (p.b_scaled - 1) / 2, "l");
            m2 = to_int((p.b_scaled - 1) / 2, "m2");
            inst.formula = Formula::l1_l2;
        } else {
            p.case_id = CaseId::c6_2;
            any_q([](std::int64_t as, std::int64_t bs) { return as <= 2 * bs - 1; });
            p.l = to_int(p.a_scaled - 3 * p.b_scaled / 2 + 2, "l");
            m2 = to_int(p.b_scaled / 2 - 1, "m2");
            inst.formula = Formula::l1_l2_l3;
        }
        // every L2/L3 block is path-free; L1 blocks make up the rest of 2l+1
        int m1 = std::max(1, 2 * p.l + 1 - m2);
        inst.l = p.l;
        inst.m1 = m1;
        inst.m2 = m2;
        p.m1 = m1;
        p.m2 = m2;
        p.m = m1 + m2;
        p.blocks = formula_blocks(inst);
    } else {
        if (b_odd) {
            p.case_id = CaseId::c7_1;
            odd_q([](std::int64_t as, std::int64_t bs) { return 4 * as <= 9 * bs - 11; });
            p.l = to_int(p.a_scaled - 2 * p.b_scaled + 2, "l");
            p.m = to_int((p.b_scaled - 1) / 2, "m");
            p.blocks = formula_blocks({Formula::l1, p.l, p.m});
        } else {
            p.case_id = CaseId::c7_2;
            any_q([](std::int64_t as, std::int64_t bs) { return 4 * as <= 9 * bs - 12; });
            p.l = to_int(p.a_scaled - 2 * p.b_scaled + 2, "l");
            p.m = to_int(p.b_scaled / 2, "m");
            p.blocks = formula_blocks({Formula::l1_l4, p.l, p.m});
        }
    }
    check_plan(p);
    return p;
}

Graph build_graph(const SynthesisPlan& p)
{
    switch (p.case_id) {
    case CaseId::c1: return complete_bipartite(to_int(p.a_scaled, "a"), to_int(p.b_scaled, "b"));
    case CaseId::c2: return case2_graph();
    case CaseId::c3: return case3_graph(to_int(p.a_scaled, "a"), to_int(p.b_scaled, "b"));
    case CaseId::c4: return inflate_triangles(petersen());
    default: return g_construct(p.l, p.blocks);
    }
}

NonhamArgument nonham_argument(const SynthesisPlan& p)
{
    switch (p.case_id) {
    case CaseId::c1:
        return {NonhamKind::bipartite_imbalance, {{"small_side", p.a_scaled}, {"large_side", p.b_scaled}}};
    case CaseId::c2:
    case CaseId::c4:
        return {NonhamKind::exhaustive, {}};
    case CaseId::c3:
        // edges of a Hamilton cycle at the independent side: 2b of them, at
        // most 2|V1| + |V3| available
        return {NonhamKind::edge_count,
                {{"lhs", 2 * p.b_scaled}, {"rhs", 2 * (p.a_scaled - p.b_scaled + 1) + p.b_scaled}}};
    default:
        return {NonhamKind::block_count,
                {{"path_free_blocks", path_free_count(p.blocks)}, {"required", 2 * p.l + 1}}};
    }
}

std::vector<Vertex> inflation_cutset(const Graph& cubic)
{
    const int n = cubic.n();
    for (Vertex v = 0; v < n; ++v)
        if (cubic.degree(v) != 3)
            throw GraphError("inflation_cutset needs a cubic graph");
    const auto edges = cubic.edges();
    // slot of each (vertex, edge) pair, as assigned by inflate_triangles
    std::vector<int> used(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<Vertex, Vertex>> slot;
    for (auto [u, v] : edges)
        slot.emplace_back(3 * u + used[u]++, 3 * v + used[v]++);

    auto edge_index = [&](Vertex u, Vertex v) {
        auto e = std::minmax(u, v);
        return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), Edge(e.first, e.second)) -
                                        edges.begin());
    };

    for (Vertex root = 0; root < n; ++root) {
        // DFS orientation: tree edges away from the root, back edges towards
        // ancestors, so only the root can lack an incoming edge.
        std::vector<int> order(static_cast<std::size_t>(n), -1);
        std::vector<Vertex> tail(edges.size(), -1);
        int counter = 0;
        std::function<void(Vertex)> dfs = [&](Vertex v) {
            order[v] = counter++;
            for (Vertex u : cubic.neighbors(v)) {
                auto e = edge_index(v, u);
                if (tail[e] >= 0)
                    continue;
                if (order[u] < 0) {
                    tail[e] = v;
                    dfs(u);
                } else {
                    tail[e] = order[u] < order[v] ? v : u;
                }
            }
        };
        dfs(root);
        std::vector<int> out(static_cast<std::size_t>(n), 0);
        bool ok = true;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (tail[e] < 0) {
                ok = false;
                break;
            }
            ok &= ++out[tail[e]] <= 2;
        }
        if (!ok)
            continue;
        std::vector<Vertex> cut;
        for (std::size_t e = 0; e < edges.size(); ++e)
            cut.push_back(tail[e] == edges[e].first ? slot[e].first : slot[e].second);
        std::sort(cut.begin(), cut.end());
        return cut;
    }
    throw SynthesisError("no orientation with out-degree <= 2 found");
}

std::vector<Vertex> witness_cutset(const SynthesisPlan& p)
{
    std::vector<Vertex> cut;
    switch (p.case_id) {
    case CaseId::c1:
        for (Vertex v = 0; v < p.a_scaled; ++v)
            cut.push_back(v);
        return cut;
    case CaseId::c2:
        return {0, 3};  // x1, x4
    case CaseId::c3: {
        // V1 plus z_1..z_{b-1}
        const auto k = static_cast<Vertex>(p.a_scaled - p.b_scaled + 1);
        const auto b = static_cast<Vertex>(p.b_scaled);
        for (Vertex v = 0; v < k; ++v)
            cut.push_back(v);
        for (int i = 1; i <= b - 1; ++i)
            cut.push_back(k + b + i - 1);
        return cut;
    }
    case CaseId::c4:
        return inflation_cutset(petersen());
    default:
        break;
    }

    // T plus the high-degree vertices of the blocks that carry the formula:
    // all blocks for 5.x and 7.x, only the L2/L3 blocks for 6.x (all L1
    // blocks when there are none, which the hypotheses allow only for l = 2).
    const bool mixed = p.case_id == CaseId::c6_1 || p.case_id == CaseId::c6_2;
    const bool has_non_l1 = std::any_of(p.blocks.begin(), p.blocks.end(), [](BlockKind k) { return k != BlockKind::L1; });
    for (Vertex v = 0; v < p.l; ++v)
        cut.push_back(v);
    Vertex offset = p.l;
    for (BlockKind kind : p.blocks) {
        if (!mixed || kind != BlockKind::L1 || !has_non_l1)
            for (Vertex v : block_cutset(kind))
                cut.push_back(offset + v);
        offset += block(kind).graph.n();
    }
    return cut;
}

Synthesis build(const SynthesisPlan& p)
{
    check_plan(p);
    Synthesis out;
    out.graph = build_graph(p);
    Certificate& c = out.certificate;
    c.plan = p;
    c.n = out.graph.n();
    c.nonhamiltonicity = nonham_argument(p);
    c.witness = make_witness(out.graph, witness_cutset(p));
    c.predicted_tau = predicted_toughness(p);
    if (c.witness.ratio != p.target)
        throw SynthesisError("witness ratio " + c.witness.ratio.str() + " differs from target " + p.target.str());

    switch (p.case_id) {
    case CaseId::c4:
        c.notes.push_back("toughness >= 3/2 is not checked by enumeration at n=30; the cutset gives the upper bound");
        break;
    case CaseId::c5_2:
    case CaseId::c6_2:
    case CaseId::c7_2:
    case CaseId::c5_1:
    case CaseId::c6_1:
    case CaseId::c7_1:
        c.notes.push_back("vertex order: T = 0..l-1, then blocks in list order; L1-L3 terminals w1,w5; L4 terminals w4,w5");
        c.notes.push_back("L2 numbering: w1, u(w2=w8), w3, w4, w5, w6, w7");
        break;
    default:
        break;
    }
    if (mixed_case(p.case_id))
        c.notes.push_back("case 6 covers 7/4 <= t <= 2; m1 = max(1, 2l+1 - m2)");
    if (p.case_id == CaseId::c6_2)
        c.notes.push_back("l = a - 3b/2 + 2 for the even-denominator branch of case 6");
    if (p.case_id == CaseId::c7_2)
        c.notes.push_back("q is the smallest with a/b <= 9/4 - 3/(bq); L4 admits a Hamilton x-y path and is not counted");
    if (p.q > 1)
        c.notes.push_back("t scaled to " + std::to_string(p.a_scaled) + "/" + std::to_string(p.b_scaled) +
                          " with q=" + std::to_string(p.q));
    return out;
}

}  // namespace tough
