// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tough/blocks.hpp"
#include "tough/graph_io.hpp"
#include "tough/oracles.hpp"
#include "tough/synth.hpp"
#include "tough/verify.hpp"

using namespace tough;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream log;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            if (!ok)
                log << "; ";
            log << "FAILED " << what;
            ok = false;
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void(Outcome&)> body;
};

std::string verdict_str(Verdict v) { return to_string(v); }

void formula_instance(Outcome& o, const FormulaInstance& c, int expected_n, std::ostringstream& info)
{
    auto res = check_formula_instance(c);
    o.expect(res.n == expected_n, to_string(c.formula) + " n=" + std::to_string(res.n) + " expected " +
                                      std::to_string(expected_n));
    o.expect(res.passed, to_string(c.formula) + " oracle " + res.oracle.str() + " vs formula " + res.predicted.str());
    info << " " << to_string(c.formula) << "(n=" << res.n << ")=" << res.oracle.str();
}

void crit1(Outcome& o)
{
    for (BlockKind k : {BlockKind::L1, BlockKind::L2, BlockKind::L3, BlockKind::L4}) {
        Block b = block(k);
        auto res = has_hamilton_path(b.graph, b.x, b.y);
        Verdict want = k == BlockKind::L4 ? Verdict::yes : Verdict::no;
        o.expect(res.verdict == want, to_string(k) + " gave " + verdict_str(res.verdict));
        o.expect(want == Verdict::no || is_hamilton_path(b.graph, res.witness, b.x, b.y), "L4 witness");
    }
    o.log << "L1-L3 have no x-y Hamilton path, L4 does";
}

void crit2(Outcome& o)
{
    auto eq = [&](const Graph& g, Rational want, const char* name) {
        auto r = toughness_exact(g);
        o.expect(!r.infinite && r.value == want, std::string(name) + " tau=" + (r.infinite ? "inf" : r.value.str()));
    };
    eq(complete_bipartite(2, 3), Rational(2, 3), "K23");
    eq(case2_graph(), Rational(1), "case2");
    eq(cycle_graph(5), Rational(1), "C5");
    eq(petersen(), Rational(4, 3), "Petersen");
    o.expect(toughness_exact(complete_graph(4)).infinite, "K4 not infinite");
    auto h = is_hamiltonian(case2_graph());
    o.expect(h.verdict == Verdict::no, "case2 Hamiltonicity");
    o.log << "K23=2/3 case2=1 (nonhamiltonian) C5=1 Petersen=4/3 K4=inf";
}

void crit3(Outcome& o)
{
    std::ostringstream info;
    formula_instance(o, {Formula::l2, 2, 1}, 9, info);
    formula_instance(o, {Formula::l2, 3, 1}, 10, info);
    formula_instance(o, {Formula::l2, 2, 2}, 16, info);
    o.log << info.str().substr(1);
}

void crit4(Outcome& o)
{
    std::ostringstream info;
    formula_instance(o, {Formula::l2_l3, 2, 1}, 11, info);
    formula_instance(o, {Formula::l2_l3, 3, 1}, 12, info);
    o.log << info.str().substr(1);
}

void crit5(Outcome& o)
{
    std::ostringstream info;
    formula_instance(o, {Formula::l1_l2, 2, 0, 1, 1}, 17, info);
    formula_instance(o, {Formula::l1_l2, 2, 0, 1, 0}, 10, info);
    // with m2 = 0 the layout is L1 x 1, which the all-L1 formula also covers
    FormulaInstance m2zero{Formula::l1_l2, 2, 0, 1, 0};
    FormulaInstance uniform{Formula::l1, 2, 1};
    o.expect(formula_blocks(m2zero) == formula_blocks(uniform), "layouts differ");
    o.expect(formula_value(m2zero) == formula_value(uniform),
             "cross-formula " + formula_value(m2zero).str() + " vs " + formula_value(uniform).str());
    o.log << info.str().substr(1) << "; m2=0 agrees with all-L1 formula (" << formula_value(uniform).str() << ")";
}

void crit6(Outcome& o)
{
    std::ostringstream info;
    formula_instance(o, {Formula::l1_l2_l3, 2, 0, 1, 1}, 19, info);
    o.log << info.str().substr(1);
}

void crit7(Outcome& o)
{
    std::ostringstream info;
    formula_instance(o, {Formula::l1_l4, 2, 1}, 7, info);
    formula_instance(o, {Formula::l1_l4, 2, 2}, 15, info);
    o.log << info.str().substr(1);
}

void end_to_end(Outcome& o, const Rational& t, bool want_exact)
{
    auto s = build(plan(t));
    auto r = check_certificate(s.graph, s.certificate);
    const auto& p = s.certificate.plan;
    o.expect(r.accepted(), t.str() + " rejected");
    if (want_exact)
        o.expect(r.toughness == ToughnessStatus::oracle_exact, t.str() + " toughness " + to_string(r.toughness));
    else
        o.expect(r.toughness == ToughnessStatus::witness_upper_bound_only, t.str() + " " + to_string(r.toughness));
    o.expect(r.nonhamiltonicity != NonhamStatus::failed, t.str() + " nonhamiltonicity failed");
    o.expect(s.certificate.witness.ratio == t, t.str() + " witness ratio");
    o.expect(predicted_toughness(p) == t, t.str() + " formula");
    if (!want_exact) {
        o.expect(s.certificate.nonhamiltonicity.kind == NonhamKind::block_count, t.str() + " argument kind");
        int block_checks = static_cast<int>(std::count_if(r.checks.begin(), r.checks.end(), [](const CheckOutcome& c) {
            return c.name.rfind("block_", 0) == 0;
        }));
        o.expect(block_checks >= 1, t.str() + " per-kind path checks missing");
    }
    o.log << t.str() << ":case " << to_string(p.case_id) << " n=" << s.graph.n() << " q=" << p.q << " "
          << to_string(r.toughness) << "/" << to_string(r.nonhamiltonicity) << "; ";
}

void crit8(Outcome& o)
{
    for (auto t : {Rational(2, 3), Rational(1), Rational(6, 5), Rational(4, 3)})
        end_to_end(o, t, true);
    auto p = plan(Rational(4, 3));
    o.expect(p.case_id == CaseId::c3 && p.q == 3, "4/3 plan");
    o.expect(nonham_argument(p).kind == NonhamKind::edge_count, "4/3 argument is not EDGE_COUNT");
}

void crit9(Outcome& o)
{
    for (auto t : {Rational(5, 3), Rational(7, 4), Rational(2), Rational(11, 5)})
        end_to_end(o, t, false);
    o.expect(build_graph(plan(Rational(11, 5))).n() == 229, "11/5 size");
}

void crit10(Outcome& o)
{
    auto s = build(plan(Rational(3, 2)));
    o.expect(s.graph.n() == 30, "n");
    auto h = is_hamiltonian(s.graph);
    o.expect(h.verdict == Verdict::no, "Hamiltonicity " + verdict_str(h.verdict));
    auto w = make_witness(s.graph, s.certificate.witness.cutset);
    o.expect(w.cutset.size() == 15 && w.component_count == 10 && w.ratio == Rational(3, 2), "cutset");
    auto r = check_certificate(s.graph, s.certificate);
    o.expect(r.accepted(), "certificate rejected");
    o.expect(r.toughness == ToughnessStatus::witness_upper_bound_only, "status " + to_string(r.toughness));
    o.log << "n=30 nonhamiltonian by " << to_string(h.method) << " (" << h.nodes << " nodes); cutset 15/10 = 3/2; "
          << "tau >= 3/2 not desk-verified (" << to_string(r.toughness) << ")";
}

void crit11(Outcome& o)
{
    std::mt19937 rng(1);
    int plans = 0;
    while (plans < 1000) {
        std::int64_t b = 1 + static_cast<std::int64_t>(rng() % 60);
        std::int64_t a = 1 + static_cast<std::int64_t>(rng() % (9 * b / 4 + 1));
        Rational t(a, b);
        if (t >= Rational(9, 4))
            continue;
        ++plans;
        auto p = plan(t);
        if (predicted_toughness(p) != t || Rational(p.a_scaled, p.b_scaled) != t) {
            o.expect(false, "plan identity for " + t.str());
            break;
        }
    }

    int fuzzed = 0, rejected = 0;
    for (auto t : {Rational(1, 3), Rational(2, 3), Rational(1), Rational(6, 5), Rational(4, 3), Rational(5, 3)}) {
        auto s = build(plan(t));
        for (int field = 0; field < 6; ++field) {
            Certificate c = s.certificate;
            switch (field) {
            case 0: c.witness.cutset.pop_back(); break;
            case 1: c.witness.component_count += 1; break;
            case 2: c.predicted_tau = c.predicted_tau + Rational(1, 2); break;
            case 3: c.plan.l += 1; break;
            case 4: c.plan.m += 1; break;
            case 5:
                if (c.plan.blocks.empty())
                    c.plan.blocks.push_back(BlockKind::L1);
                else
                    c.plan.blocks.front() = BlockKind::L4;
                break;
            }
            ++fuzzed;
            if (!check_certificate(s.graph, c).accepted())
                ++rejected;
        }
    }
    o.expect(rejected == fuzzed, "fuzz: " + std::to_string(rejected) + "/" + std::to_string(fuzzed) + " rejected");

    std::vector<Graph> corpus = {complete_bipartite(2, 3), case2_graph(), petersen(), inflate_triangles(petersen()),
                                 complete_graph(1), empty_graph(0), complete_graph(64)};
    for (BlockKind k : {BlockKind::L1, BlockKind::L2, BlockKind::L3, BlockKind::L4})
        corpus.push_back(block(k).graph);
    for (auto t : {Rational(6, 5), Rational(5, 3), Rational(7, 4), Rational(11, 5), Rational(17, 8)})
        corpus.push_back(build_graph(plan(t)));
    std::bernoulli_distribution coin(0.3);
    for (int i = 0; i < 200; ++i) {
        int n = static_cast<int>(rng() % 80);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        corpus.push_back(make_graph(n, edges));
    }
    int round_trips = 0;
    for (const auto& g : corpus) {
        if (decode_graph6(encode_graph6(g)) == g && parse_graph(format_graph(g, GraphFormat::g6)) == g)
            ++round_trips;
    }
    o.expect(round_trips == static_cast<int>(corpus.size()), "graph6 round trip");
    o.log << plans << " plans; " << rejected << "/" << fuzzed << " corruptions rejected; " << round_trips << "/"
          << corpus.size() << " graph6 round trips";
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "block Hamilton paths", 1, crit1},
        {2, "known toughness values", 10, crit2},
        {3, "L2 join formula", 300, crit3},
        {4, "L2/L3 join formula", 60, crit4},
        {5, "L1/L2 join formula", 1800, crit5},
        {6, "L1/L2/L3 join formula", 7200, crit6},
        {7, "L1/L4 join formula", 60, crit7},
        {8, "end-to-end small rationals", 3600, crit8},
        {9, "end-to-end large rationals", 60, crit9},
        {10, "inflated Petersen", 300, crit10},
        {11, "property suites", 600, crit11},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& ex) {
            o.expect(false, std::string("exception: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds)
            o.expect(false, "over time limit");
        if (!o.ok)
            ++failures;
        std::printf("%s %2d %-28s %8.3fs (limit %gs)  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    c.limit_seconds, o.log.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
