#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tough/graph.hpp"
#include "tough/oracles.hpp"
#include "tough/synth.hpp"

namespace tough {

enum class ToughnessStatus { oracle_exact, witness_upper_bound_only, failed };
enum class NonhamStatus { oracle_exhaustive, structural, failed };

std::string to_string(ToughnessStatus s);
std::string to_string(NonhamStatus s);

struct CheckOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
    double millis = 0;
};

struct VerificationReport {
    ToughnessStatus toughness = ToughnessStatus::failed;
    NonhamStatus nonhamiltonicity = NonhamStatus::failed;
    std::optional<int> alpha;
    std::vector<CheckOutcome> checks;
    /// Distinct codes: plan_mismatch, rebuild_mismatch, witness_invalid,
    /// witness_ratio_mismatch, predicted_mismatch, structural_predicate_false,
    /// oracle_contradiction.
    std::vector<std::string> rejections;

    bool accepted() const;
};

struct VerifyLimits {
    /// Exact toughness and exhaustive Hamiltonicity run only up to this order.
    int max_oracle_n = 24;
    HamiltonLimits hamilton;
    int alpha_max_n = 64;
};

/// Checks a graph against its certificate with everything affordable at its
/// size. The cutset ratio is always rechecked (toughness <= t); the matching
/// lower bound is only claimed when exact enumeration ran.
VerificationReport check_certificate(const Graph& g, const Certificate& c, const VerifyLimits& limits = {});

nlohmann::json to_json(const VerificationReport& r);

struct FormulaCheck {
    bool passed = false;
    int n = 0;
    Rational predicted;
    Rational oracle;
};

/// Builds the construction for one formula instance and compares its exact
/// toughness with the formula. Throws SynthesisError if the instance is
/// outside the formula's hypotheses, OracleLimitError if too large.
FormulaCheck check_formula_instance(const FormulaInstance& c, int max_n = kDefaultToughnessMaxN);

}  // namespace tough
