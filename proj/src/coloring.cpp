#include "cocrit/coloring.hpp"

#include <stdexcept>

#include "cocrit/errors.hpp"
#include "cocrit/graph6.hpp"

namespace cocrit {

EdgeColoring::EdgeColoring(Graph base, Graph red, Graph blue)
    : base_(std::move(base))
    , red_(std::move(red))
    , blue_(std::move(blue))
{
}

EdgeColoring::EdgeColoring(Graph base, const std::vector<std::pair<Edge, Color>>& assignment)
    : base_(base)
    , red_(base.order())
    , blue_(base.order())
{
    int assigned = 0;
    for (const auto& [e, c] : assignment) {
        if (!base_.has_edge(e.u, e.v))
            throw std::invalid_argument("coloring assigns a pair that is not a base edge");
        Graph& side = (c == Color::Red) ? red_ : blue_;
        if (red_.has_edge(e.u, e.v) || blue_.has_edge(e.u, e.v))
            throw std::invalid_argument("edge colored twice");
        side.add_edge(e.u, e.v);
        ++assigned;
    }
    if (assigned != base_.edge_count())
        throw std::invalid_argument("partial coloring: " + std::to_string(assigned) + " of "
            + std::to_string(base_.edge_count()) + " edges colored");
}

EdgeColoring EdgeColoring::monochromatic(Graph base, Color c)
{
    Graph empty(base.order());
    Graph red = (c == Color::Red) ? base : empty;
    Graph blue = (c == Color::Blue) ? base : empty;
    return EdgeColoring(std::move(base), std::move(red), std::move(blue));
}

EdgeColoring EdgeColoring::from_red_edges(Graph base, const std::vector<Edge>& red)
{
    Graph r(base.order());
    Graph b = base;
    for (const Edge& e : red) {
        if (!base.has_edge(e.u, e.v))
            throw std::invalid_argument("red edge is not a base edge");
        r.add_edge(e.u, e.v);
        b.remove_edge(e.u, e.v);
    }
    if (r.edge_count() != static_cast<int>(red.size()))
        throw std::invalid_argument("duplicate red edge");
    return EdgeColoring(std::move(base), std::move(r), std::move(b));
}

Color EdgeColoring::color_of(int u, int v) const
{
    if (red_.has_edge(u, v))
        return Color::Red;
    if (blue_.has_edge(u, v))
        return Color::Blue;
    throw std::invalid_argument("pair is not an edge of the colored graph");
}

std::vector<std::pair<Edge, Color>> EdgeColoring::entries() const
{
    std::vector<std::pair<Edge, Color>> out;
    for (const Edge& e : base_.edges())
        out.emplace_back(e, color_of(e.u, e.v));
    return out;
}

bool is_critical(const Graph& g, int k, const EdgeColoring& c)
{
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
    if (c.base() != g)
        throw std::invalid_argument("coloring does not belong to this graph");
    return !contains_c4(c.red()) && max_star(c.blue()) <= k - 1;
}

nlohmann::ordered_json coloring_to_json(const EdgeColoring& c, int k)
{
    nlohmann::ordered_json j;
    j["graph"] = encode_graph6(c.base());
    j["k"] = k;
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [e, col] : c.entries())
        edges.push_back({e.u, e.v, col == Color::Red ? "red" : "blue"});
    j["edges"] = std::move(edges);
    return j;
}

EdgeColoring coloring_from_json(const nlohmann::json& j, int* k_out)
{
    if (!j.contains("graph") || !j.contains("edges"))
        throw parse_error("coloring JSON missing \"graph\" or \"edges\"", 0);
    Graph base = decode_graph6(j.at("graph").get<std::string>());
    if (k_out)
        *k_out = j.value("k", 0);
    std::vector<std::pair<Edge, Color>> assignment;
    for (const auto& entry : j.at("edges")) {
        if (!entry.is_array() || entry.size() != 3)
            throw parse_error("coloring edge entry must be [u, v, color]", 0);
        const std::string col = entry.at(2).get<std::string>();
        if (col != "red" && col != "blue")
            throw parse_error("edge color must be \"red\" or \"blue\"", 0);
        assignment.emplace_back(make_edge(entry.at(0).get<int>(), entry.at(1).get<int>()),
            col == "red" ? Color::Red : Color::Blue);
    }
    return EdgeColoring(std::move(base), assignment);
}

} // namespace cocrit
