#include <doctest.h>

#include <algorithm>
#include <random>

#include "tough/verify.hpp"

using namespace tough;

namespace {

bool has_rejection(const VerificationReport& r, const std::string& code)
{
    return std::find(r.rejections.begin(), r.rejections.end(), code) != r.rejections.end();
}

}  // namespace

TEST_CASE("K_{2,3} certificate is accepted by both oracles")
{
    auto s = build(plan(Rational(2, 3)));
    auto r = check_certificate(s.graph, s.certificate);
    CHECK(r.accepted());
    CHECK(r.toughness == ToughnessStatus::oracle_exact);
    CHECK(r.nonhamiltonicity == NonhamStatus::oracle_exhaustive);
    REQUIRE(r.alpha);
    CHECK(*r.alpha == 3);
    CHECK(to_json(r)["toughness_status"] == "ORACLE_EXACT");
}

TEST_CASE("large witness is accepted with an upper bound only")
{
    auto s = build(plan(Rational(5, 3)));
    auto r = check_certificate(s.graph, s.certificate);
    CHECK(r.accepted());
    CHECK(r.toughness == ToughnessStatus::witness_upper_bound_only);
    CHECK(r.nonhamiltonicity == NonhamStatus::structural);
    auto j = to_json(r);
    CHECK(j["nonhamiltonicity_status"] == "STRUCTURAL");
    CHECK(j["rejections"].empty());
}

TEST_CASE("every case verifies")
{
    for (auto t : {Rational(1, 4), Rational(2, 3), Rational(1), Rational(6, 5), Rational(4, 3), Rational(3, 2),
                   Rational(13, 8), Rational(7, 4), Rational(2), Rational(17, 8)}) {
        CAPTURE(t.str());
        auto s = build(plan(t));
        auto r = check_certificate(s.graph, s.certificate);
        CHECK(r.accepted());
        if (s.graph.n() <= 24)
            CHECK(r.toughness == ToughnessStatus::oracle_exact);
    }
}

TEST_CASE("tampered predicted toughness is rejected")
{
    auto s = build(plan(Rational(5, 3)));
    auto c = s.certificate;
    c.predicted_tau = Rational(7, 4);
    auto r = check_certificate(s.graph, c);
    CHECK_FALSE(r.accepted());
    CHECK(has_rejection(r, "predicted_mismatch"));
    CHECK(r.toughness == ToughnessStatus::failed);
}

TEST_CASE("graph that does not match the plan is rejected")
{
    auto s = build(plan(Rational(6, 5)));
    auto other = build(plan(Rational(2, 3)));
    auto r = check_certificate(other.graph, s.certificate);
    CHECK_FALSE(r.accepted());
    CHECK(has_rejection(r, "rebuild_mismatch"));
}

TEST_CASE("single-field corruptions are always rejected")
{
    std::mt19937 rng(11);
    int corrupted = 0;
    for (auto t : {Rational(1, 2), Rational(2, 3), Rational(1), Rational(6, 5), Rational(4, 3), Rational(5, 3),
                   Rational(2), Rational(11, 5)}) {
        auto s = build(plan(t));
        const Certificate& good = s.certificate;
        for (int field = 0; field < 7; ++field) {
            for (int trial = 0; trial < 3; ++trial) {
                Certificate c = good;
                auto& cut = c.witness.cutset;
                switch (field) {
                case 0:  // drop a cutset vertex
                    cut.erase(cut.begin() + static_cast<long>(rng() % cut.size()));
                    break;
                case 1: {  // add a vertex outside the cutset
                    std::vector<Vertex> outside;
                    for (Vertex v = 0; v < s.graph.n(); ++v)
                        if (!std::binary_search(cut.begin(), cut.end(), v))
                            outside.push_back(v);
                    cut.push_back(outside[rng() % outside.size()]);
                    std::sort(cut.begin(), cut.end());
                    break;
                }
                case 2:
                    c.witness.component_count += 1 + static_cast<int>(rng() % 3);
                    break;
                case 3:
                    c.predicted_tau = c.predicted_tau + Rational(1 + static_cast<int>(rng() % 5), 7);
                    break;
                case 4:
                    c.plan.l += (trial % 2 == 0) ? 1 : -1;
                    break;
                case 5:
                    c.plan.m += 1 + trial;
                    break;
                case 6:
                    if (c.plan.blocks.empty())
                        c.plan.blocks.push_back(BlockKind::L2);
                    else
                        c.plan.blocks[rng() % c.plan.blocks.size()] = BlockKind::L4;
                    break;
                }
                auto r = check_certificate(s.graph, c);
                CAPTURE(t.str());
                CAPTURE(field);
                CHECK_FALSE(r.accepted());
                CHECK_FALSE(r.rejections.empty());
                ++corrupted;
            }
        }
    }
    CHECK(corrupted == 8 * 7 * 3);
}

TEST_CASE("formula instances match the exact oracle")
{
    auto c3 = check_formula_instance({Formula::l2, 2, 1});
    CHECK(c3.passed);
    CHECK(c3.n == 9);
    CHECK(c3.oracle == Rational(5, 3));

    auto c4 = check_formula_instance({Formula::l2_l3, 2, 1});
    CHECK(c4.passed);
    CHECK(c4.n == 11);
    CHECK(c4.oracle == Rational(3, 2));

    auto c7 = check_formula_instance({Formula::l1_l4, 2, 2});
    CHECK(c7.passed);
    CHECK(c7.n == 15);
    CHECK(c7.oracle == Rational(2));

    CHECK(check_formula_instance({Formula::l1_l2, 2, 0, 1, 1}).passed);
    CHECK(check_formula_instance({Formula::l1_l2_l3, 2, 0, 1, 1}).passed);
    CHECK(check_formula_instance({Formula::l1, 2, 1}).passed);

    CHECK_THROWS_AS(check_formula_instance({Formula::l2, 1, 1}), SynthesisError);
    CHECK_THROWS_AS(check_formula_instance({Formula::l2, 2, 5}), OracleLimitError);
}

TEST_CASE("enough path-free blocks means no Hamilton cycle, confirmed exhaustively")
{
    struct Instance {
        int l;
        std::vector<BlockKind> blocks;
    };
    using K = BlockKind;
    std::vector<Instance> instances = {
        {0, {K::L2, K::L2}}, {0, {K::L1, K::L2}}, {0, {K::L4, K::L2}},
        {0, {K::L3, K::L1}}, {1, {K::L2, K::L2, K::L2}}, {1, {K::L2, K::L4, K::L4}},
    };
    for (const auto& inst : instances) {
        Graph g = g_construct(inst.l, inst.blocks);
        int path_free = 0;
        for (K k : inst.blocks)
            path_free += is_path_free(k) ? 1 : 0;
        CAPTURE(g.n());
        REQUIRE(g.n() <= 24);
        auto res = is_hamiltonian(g);
        REQUIRE(res.verdict != Verdict::unknown);
        if (path_free >= 2 * inst.l + 1)
            CHECK(res.verdict == Verdict::no);
    }
    std::vector<K> two{K::L4, K::L4};
    CHECK(is_hamiltonian(g_construct(0, two)).verdict == Verdict::yes);
}
