#ifndef COCRIT_SOLVER_HPP
#define COCRIT_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cocrit/coloring.hpp"
#include "cocrit/graph.hpp"

namespace cocrit {

enum class EdgeOrderHeuristic : std::uint8_t {
    // Most triangles through the edge first, ties lexicographic. Dense
    // common neighborhoods are the most constrained places to branch.
    TriangleCountDesc,
    Lexicographic,
};

struct SolverConfig {
    EdgeOrderHeuristic order = EdgeOrderHeuristic::TriangleCountDesc;
    std::uint64_t node_budget = 0; // decisions; 0 = unlimited
    double time_budget_secs = 0.0; // 0 = unlimited
    std::size_t enumeration_limit = 0; // 0 = unlimited
    bool block_witnesses = true; // enumeration continues past found witnesses
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t propagations = 0;
    double wall_ms = 0.0;
};

enum class SolveStatus : std::uint8_t { Witness, Exhausted, Aborted };

struct SolveOutcome {
    SolveStatus status = SolveStatus::Aborted;
    std::optional<EdgeColoring> witness;
    SolveStats stats;
};

// Complete backtracking search over red/blue edge assignments with two
// propagation rules: a vertex with k-1 incident blue edges forces its
// undecided edges red, and an edge whose red assignment would close a red
// C4 is forced blue.
SolveOutcome find_critical_coloring(const Graph& g, int k, const SolverConfig& cfg = {});

// True iff every 2-coloring of E(g) has a red C4 or a blue K_{1,k}.
// Throws indeterminate_error if the search aborts on budget.
bool arrows(const Graph& g, int k, const SolverConfig& cfg = {});

struct EnumerationOutcome {
    std::vector<EdgeColoring> colorings; // in deterministic search order
    bool truncated = false; // limit or budget cut the enumeration short
    SolveStats stats;
};

EnumerationOutcome enumerate_critical_colorings(const Graph& g, int k,
    const SolverConfig& cfg = {});

// A critical coloring in which no single blue edge can be recolored red
// without closing a red C4. For a co-critical graph this makes the red
// subgraph C4-saturated. Throws std::domain_error when g admits no
// critical coloring.
EdgeColoring find_red_maximal_coloring(const Graph& g, int k, const SolverConfig& cfg = {});

// Certificate that no critical coloring of g can exist: an edge lying in
// at least 2k triangles. Any critical coloring would give one endpoint k
// blue edges.
struct PrecheckRefutation {
    Edge edge;
    int common_neighbor_count = 0;
    int threshold = 0; // 2k
};

std::optional<PrecheckRefutation> precheck_filters(const Graph& g, int k);

} // namespace cocrit

#endif
