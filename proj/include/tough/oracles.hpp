#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tough/graph.hpp"
#include "tough/rational.hpp"

namespace tough {

/// Raised when an exact oracle is asked to run above its size limit.
class OracleLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CutsetWitness {
    std::vector<Vertex> cutset;  ///< sorted
    int component_count = 0;
    Rational ratio;
};

/// Recounts components of g minus `cutset`. Throws GraphError if the set has
/// out-of-range members or leaves fewer than two components.
CutsetWitness make_witness(const Graph& g, std::vector<Vertex> cutset);

struct ToughnessResult {
    bool infinite = false;
    Rational value;
    std::optional<CutsetWitness> witness;
};

inline constexpr int kDefaultToughnessMaxN = 26;

/// Exact toughness by layered cutset enumeration (OpenMP over each layer).
/// Layers run in increasing |S| and stop once |S| / min(n - |S|, alpha)
/// can no longer beat the best ratio. Ties resolve to the smallest |S|, then
/// the numerically smallest vertex mask, so the witness does not depend on
/// the thread count.
ToughnessResult toughness_exact(const Graph& g, int max_n = kDefaultToughnessMaxN);

/// Serial brute force over all 2^n subsets with a union-find component
/// count. No pruning; kept as the independent check on toughness_exact.
ToughnessResult toughness_reference(const Graph& g, int max_n = 22);

/// Deterministic local search for a cutset with small |S|/omega. Only an
/// upper bound on toughness. `budget` caps the number of component counts.
std::optional<CutsetWitness> toughness_upper_search(const Graph& g, long budget = 20000,
                                                    std::uint64_t seed = 0x5eedULL);

enum class Verdict { yes, no, unknown };
enum class HamiltonMethod { trivial, backtracking, subset_dp, none };

std::string to_string(Verdict v);
std::string to_string(HamiltonMethod m);

struct HamiltonResult {
    Verdict verdict = Verdict::unknown;
    /// Cycle (first vertex not repeated) or x..y path when verdict is yes.
    std::vector<Vertex> witness;
    HamiltonMethod method = HamiltonMethod::none;
    long nodes = 0;
};

struct HamiltonLimits {
    long node_budget = 20'000'000;
    int dp_max_n = 24;
};

/// Backtracking first; a subset DP takes over when the node budget runs out
/// and n <= dp_max_n (the backtracker gets at most 200000 nodes when the DP
/// is available). Anything else is reported as unknown.
HamiltonResult is_hamiltonian(const Graph& g, const HamiltonLimits& limits = {});
HamiltonResult has_hamilton_path(const Graph& g, Vertex x, Vertex y, const HamiltonLimits& limits = {});

/// The two deciders on their own, for cross-checking.
HamiltonResult hamilton_cycle_backtracking(const Graph& g, long node_budget);
HamiltonResult hamilton_cycle_dp(const Graph& g, int max_n = 24);
HamiltonResult hamilton_path_backtracking(const Graph& g, Vertex x, Vertex y, long node_budget);
HamiltonResult hamilton_path_dp(const Graph& g, Vertex x, Vertex y, int max_n = 24);

bool is_hamilton_cycle(const Graph& g, const std::vector<Vertex>& cycle);
bool is_hamilton_path(const Graph& g, const std::vector<Vertex>& path, Vertex x, Vertex y);

/// Exact maximum independent set size by branch and bound (n <= max_n <= 64).
int independence_number(const Graph& g, int max_n = 64);

}  // namespace tough
