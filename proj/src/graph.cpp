#include "cocrit/graph.hpp"

#include <stdexcept>
#include <string>

namespace cocrit {

std::vector<int> set_to_vector(VertexSet s)
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

Edge make_edge(int u, int v)
{
    if (u == v)
        throw std::invalid_argument("edge endpoints must differ");
    if (u > v)
        std::swap(u, v);
    return Edge{u, v};
}

Graph::Graph(int n)
    : n_(n)
{
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [1, "
            + std::to_string(kMaxVertices) + "]");
}

Graph Graph::complete(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n)
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph Graph::star(int leaves)
{
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

Graph Graph::complete_bipartite(int a, int b)
{
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside [0, "
            + std::to_string(n_) + ")");
}

int Graph::edge_count() const
{
    int twice = 0;
    for (int v = 0; v < n_; ++v)
        twice += set_size(adj_[v]);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] & vertex_bit(v)) != 0;
}

void Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loops are not allowed");
    adj_[u] |= vertex_bit(v);
    adj_[v] |= vertex_bit(u);
}

void Graph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~vertex_bit(v);
    adj_[v] &= ~vertex_bit(u);
}

Graph Graph::with_edge(Edge e) const
{
    Graph g = *this;
    g.add_edge(e.u, e.v);
    return g;
}

VertexSet Graph::neighbors(int v) const
{
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const
{
    return set_size(neighbors(v));
}

VertexSet Graph::vertex_mask() const
{
    return n_ == kMaxVertices ? ~VertexSet{0} : (vertex_bit(n_) - 1);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n_; ++u)
        for_each_vertex(adj_[u] & ~(vertex_bit(u + 1) - 1),
            [&](int v) { out.push_back(Edge{u, v}); });
    return out;
}

bool Graph::is_complete() const
{
    return edge_count() == n_ * (n_ - 1) / 2;
}

bool contains_c4(const Graph& g)
{
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (set_size(g.neighbors(u) & g.neighbors(v)) >= 2)
                return true;
    return false;
}

int max_star(const Graph& g)
{
    int best = 0;
    for (int v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

VertexSet common_neighbors(const Graph& g, int u, int v)
{
    if (u == v)
        throw std::invalid_argument("common_neighbors requires distinct vertices");
    return g.neighbors(u) & g.neighbors(v);
}

std::vector<Edge> non_edges(const Graph& g)
{
    std::vector<Edge> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v))
                out.push_back(Edge{u, v});
    return out;
}

bool is_c4_saturated(const Graph& g)
{
    if (contains_c4(g))
        return false;
    for (const Edge& e : non_edges(g))
        if (!contains_c4(g.with_edge(e)))
            return false;
    return true;
}

bool roles_partition(const VertexRoleMap& roles, int n)
{
    VertexSet seen = 0;
    int total = 0;
    for (const auto& [name, verts] : roles) {
        for (int v : verts) {
            if (v < 0 || v >= n)
                return false;
            if (seen & vertex_bit(v))
                return false;
            seen |= vertex_bit(v);
            ++total;
        }
    }
    return total == n;
}

} // namespace cocrit
