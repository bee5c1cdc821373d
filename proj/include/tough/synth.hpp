#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tough/blocks.hpp"
#include "tough/graph.hpp"
#include "tough/oracles.hpp"
#include "tough/rational.hpp"

namespace tough {

class SynthesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Which construction realises t. Boundaries: 1 below 1, 2 at 1, 3 in
/// (1, 3/2), 4 at 3/2, 5 in (3/2, 7/4), 6 in [7/4, 2], 7 in (2, 9/4); the
/// .1/.2 suffix is the parity of the scaled denominator (odd/even).
enum class CaseId { c1, c2, c3, c4, c5_1, c5_2, c6_1, c6_2, c7_1, c7_2 };

std::string to_string(CaseId id);
CaseId parse_case_id(const std::string& text);

struct SynthesisPlan {
    Rational target;
    CaseId case_id = CaseId::c1;
    std::int64_t q = 1;
    std::int64_t a_scaled = 0;
    std::int64_t b_scaled = 0;
    int l = 0;  ///< clique size of T
    int m = 0;  ///< total block count
    std::optional<int> m1;
    std::optional<int> m2;
    std::vector<BlockKind> blocks;

    friend bool operator==(const SynthesisPlan&, const SynthesisPlan&) = default;
};

/// Picks the case for t (normalised), the smallest admissible q and the
/// derived l, m, m1, m2. Throws SynthesisError for t outside (0, 9/4) or if
/// the resulting plan fails its own consistency checks.
SynthesisPlan plan(const Rational& t);

/// Throws SynthesisError naming the first violated condition.
void check_plan(const SynthesisPlan& p);

/// Toughness formulas of the join constructions, by block layout.
enum class Formula {
    l2,        ///< L2 x m:                      (l + 3m) / (2m + 1)
    l2_l3,     ///< L2 x (m-1), L3:              (l + 3m + 1) / (2(m + 1))
    l1_l2,     ///< L1 x m1, L2 x m2:            (l + 3m2) / (2m2 + 1)
    l1_l2_l3,  ///< L1 x m1, L2 x (m2-1), L3:    (l + 3m2 + 1) / (2(m2 + 1))
    l1_l4,     ///< L1 x (m-1), L4:              (l + 4m - 2) / (2m)
    l1,        ///< L1 x m:                      (l + 4m) / (2m + 1)
};

std::string to_string(Formula f);

struct FormulaInstance {
    Formula formula = Formula::l2;
    int l = 2;
    int m = 1;   ///< used by l2, l2_l3, l1_l4, l1
    int m1 = 0;  ///< used by l1_l2, l1_l2_l3
    int m2 = 0;  ///< used by l1_l2, l1_l2_l3
};

Rational formula_value(const FormulaInstance& c);
std::vector<BlockKind> formula_blocks(const FormulaInstance& c);
/// Hypotheses under which the formula is stated (l >= 2, m >= 1, m2 >= l - 2, ...).
bool formula_hypotheses_hold(const FormulaInstance& c);

/// Exact toughness the plan's governing formula predicts.
Rational predicted_toughness(const SynthesisPlan& p);

enum class NonhamKind { bipartite_imbalance, exhaustive, edge_count, block_count };

std::string to_string(NonhamKind k);
NonhamKind parse_nonham_kind(const std::string& text);

struct NonhamArgument {
    NonhamKind kind = NonhamKind::exhaustive;
    std::map<std::string, std::int64_t> params;

    friend bool operator==(const NonhamArgument&, const NonhamArgument&) = default;
};

struct Certificate {
    SynthesisPlan plan;
    int n = 0;  ///< not serialised; taken from the graph on load
    NonhamArgument nonhamiltonicity;
    CutsetWitness witness;
    Rational predicted_tau;
    std::vector<std::string> notes;
};

struct Synthesis {
    Graph graph;
    Certificate certificate;
};

Graph build_graph(const SynthesisPlan& p);
NonhamArgument nonham_argument(const SynthesisPlan& p);
/// Explicit cutset whose ratio equals the plan's target.
std::vector<Vertex> witness_cutset(const SynthesisPlan& p);
Synthesis build(const SynthesisPlan& p);

/// Cutset of an inflated cubic graph: orient the original edges so no
/// vertex has out-degree 3 and delete the tail-side endpoint of every edge.
/// Leaves one component per original vertex.
std::vector<Vertex> inflation_cutset(const Graph& cubic);

class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace tough
