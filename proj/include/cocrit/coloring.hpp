#ifndef COCRIT_COLORING_HPP
#define COCRIT_COLORING_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cocrit/graph.hpp"

namespace cocrit {

enum class Color : std::uint8_t { Red, Blue };

// Total red/blue assignment on E(g). The red and blue subgraphs partition
// the base edge set by construction.
class EdgeColoring {
public:
    EdgeColoring(Graph base, const std::vector<std::pair<Edge, Color>>& assignment);

    static EdgeColoring monochromatic(Graph base, Color c);
    // Edges listed become red, every other base edge blue.
    static EdgeColoring from_red_edges(Graph base, const std::vector<Edge>& red);

    const Graph& base() const noexcept { return base_; }
    const Graph& red() const noexcept { return red_; }
    const Graph& blue() const noexcept { return blue_; }

    Color color_of(int u, int v) const;
    int red_count() const { return red_.edge_count(); }
    int blue_count() const { return blue_.edge_count(); }

    // (edge, color) pairs in lexicographic edge order.
    std::vector<std::pair<Edge, Color>> entries() const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    EdgeColoring(Graph base, Graph red, Graph blue);

    Graph base_;
    Graph red_;
    Graph blue_;
};

// A coloring is critical for (g, k) when the red subgraph is C4-free and
// the blue subgraph is K_{1,k}-free (max degree <= k-1).
bool is_critical(const Graph& g, int k, const EdgeColoring& c);

// Exchange format: {"graph": <graph6>, "k": <int>,
//                   "edges": [[u, v, "red"|"blue"], ...]}.
nlohmann::ordered_json coloring_to_json(const EdgeColoring& c, int k);
EdgeColoring coloring_from_json(const nlohmann::json& j, int* k_out = nullptr);

} // namespace cocrit

#endif
