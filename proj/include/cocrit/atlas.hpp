#ifndef COCRIT_ATLAS_HPP
#define COCRIT_ATLAS_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cocrit/graph.hpp"

namespace cocrit {

struct SearchSummary {
    std::string mode; // "saturated" or "cocritical"
    int n = 0;
    std::optional<int> k;
    std::optional<int> minimum_edges;
    std::vector<std::string> witnesses; // canonical graph6, sorted
    int classes_at_minimum = 0;
    std::uint64_t graphs_scanned = 0; // labeled edge subsets enumerated
    std::uint64_t classes_tested = 0; // isomorphism classes run through the validator
    double wall_ms = 0.0;
};

struct AtlasConfig {
    unsigned jobs = 0; // 0 = hardware concurrency
    // First-pass node budget per co-criticality check; graphs that hit it
    // are retried with no budget so exhaustion stays complete.
    std::uint64_t first_pass_node_budget = 200000;
    bool allow_large = false; // gates the n = 8 co-critical exhaustion
};

// Minimum edge count over all C4-saturated graphs on n vertices
// (5 <= n <= 8), scanning labeled edge subsets by increasing edge count
// with canonical-form deduplication. Witnesses revalidated with
// is_c4_saturated.
SearchSummary min_c4_saturated(int n, const AtlasConfig& cfg = {});

// Minimum edge count over all (C4, K_{1,k})-co-critical graphs on n
// vertices (5 <= n <= 7; n = 8 behind allow_large). Witnesses
// revalidated with is_cocritical.
SearchSummary min_cocritical(int n, int k, const AtlasConfig& cfg = {});

struct EnumFilter {
    int min_edges = 0;
    int max_edges = std::numeric_limits<int>::max();
    int max_degree = kMaxVertices;
    std::function<bool(const Graph&)> keep; // optional extra predicate
};

// One canonical representative per isomorphism class on n <= 8 vertices,
// ordered by (edge count, canonical form).
std::vector<Graph> enumerate_graph_classes(int n, const EnumFilter& filter = {},
    unsigned jobs = 0);

nlohmann::ordered_json summary_to_json(const SearchSummary& summary);

} // namespace cocrit

#endif
