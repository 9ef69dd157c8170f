#ifndef COCRIT_COCRITICAL_HPP
#define COCRIT_COCRITICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cocrit/bounds.hpp"
#include "cocrit/coloring.hpp"
#include "cocrit/graph.hpp"
#include "cocrit/solver.hpp"

namespace cocrit {

struct NonEdgeCheck {
    enum class Outcome : std::uint8_t {
        RefutedByPrecheck, // an edge of g+e lies in >= 2k triangles
        RefutedBySearch, // complete search exhausted g+e
        AdmitsColoring, // g+e still has a critical coloring: not co-critical
    };

    Edge edge;
    Outcome outcome = Outcome::RefutedBySearch;
    SolveStats stats;
};

struct RedMaximalDecomposition {
    int red_edges = 0;
    int blue_edges = 0;
    int s_size = 0; // |{v : blue degree <= k-2}| under the red-maximal coloring
};

struct CocriticalReport {
    bool verdict = false;
    int k = 0;
    int n = 0;
    int edge_count = 0;
    bool admits_critical_coloring = false;
    std::optional<EdgeColoring> witness;
    std::vector<NonEdgeCheck> non_edge_checks; // sorted by edge
    std::vector<NonEdgeCheck> failures; // the AdmitsColoring subset
    std::optional<Rational> bound_general; // defined when n is in range
    std::optional<long long> bound_k2; // k == 2, n >= 5
    std::optional<RedMaximalDecomposition> decomposition; // verdict only
    SolveStats total_stats;
};

struct CocriticalConfig {
    SolverConfig solver;
    unsigned jobs = 0; // 0 = hardware concurrency
};

// Verdict is true iff g admits a critical coloring and, for every
// non-edge e, g+e arrows (C4, K_{1,k}). Each non-edge is a complete,
// independent search; any budget abort raises indeterminate_error.
// Complete graphs are rejected (domain_error) by definition.
CocriticalReport is_cocritical(const Graph& g, int k, const CocriticalConfig& cfg = {});

nlohmann::ordered_json report_to_json(const CocriticalReport& report, const Graph& g);

struct LemmaEdgeStat {
    Edge edge;
    int common = 0; // |N(u) ∩ N(v)| in g
    int red_common = 0; // |N_r(u) ∩ N_r(v)|
    bool ok_red_when_dense = true; // common >= 2k-2 => red edge, red_common <= 1
    bool ok_triangle_cap = true; // common <= 2k-1
    bool ok_tight_split = true; // common == 2k-1 => the forced blue-degree split
};

// Diagnostics for the structural lemma on critical colorings of
// co-critical graphs. The operation computes the report for any critical
// coloring; the assertions are expected to hold when g is co-critical.
struct LemmaReport {
    std::vector<int> s_vertices; // {v : blue degree <= k-2}
    bool s_is_clique = false;
    int alpha_blue_s = 0; // independence number of blue[S]
    long long s_size_bound_formula = 0; // k + floor(sqrt(k-2))
    int s_size_bound_k2_case = 3; // the bound the k = 2 argument actually uses
    std::vector<LemmaEdgeStat> edges;
    bool all_hold = false; // clique, alpha <= 3, every per-edge check
};

LemmaReport check_lemma_structures(const Graph& g, int k, const EdgeColoring& c);

// Size of a maximum independent set, restricted to `within`.
int independence_number(const Graph& g, VertexSet within);

} // namespace cocrit

#endif
