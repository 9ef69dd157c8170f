#ifndef COCRIT_GRAPH_HPP
#define COCRIT_GRAPH_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cocrit {

// Adjacency rows are single-word bitsets, so graphs are capped at one
// machine word of vertices. Every instance handled by this project has
// n <= 28.
inline constexpr int kMaxVertices = 64;

using VertexSet = std::uint64_t;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
constexpr int set_size(VertexSet s) { return std::popcount(s); }

template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn)
{
    while (s) {
        fn(std::countr_zero(s));
        s &= s - 1;
    }
}

std::vector<int> set_to_vector(VertexSet s);

// Unordered vertex pair, normalized to u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(int u, int v);

// Simple undirected graph on a fixed vertex range [0, n).
// Values are cheap to copy and safe to share across threads; all
// operations below are pure.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph star(int leaves);
    static Graph complete_bipartite(int a, int b);

    int order() const noexcept { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    Graph with_edge(Edge e) const;

    VertexSet neighbors(int v) const;
    int degree(int v) const;
    VertexSet vertex_mask() const;

    std::vector<Edge> edges() const;
    bool is_complete() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

// True iff g contains a 4-cycle as a (not necessarily induced) subgraph,
// i.e. some vertex pair has at least two common neighbors.
bool contains_c4(const Graph& g);

// Maximum degree. A graph contains K_{1,k} iff max_star(g) >= k.
int max_star(const Graph& g);

// N(u) ∩ N(v). Throws std::invalid_argument when u == v.
VertexSet common_neighbors(const Graph& g, int u, int v);

// All non-adjacent unordered pairs, in lexicographic order.
std::vector<Edge> non_edges(const Graph& g);

// g is C4-free but adding any non-edge creates a C4.
bool is_c4_saturated(const Graph& g);

// Named vertex classes of a constructed graph. The sets are expected to
// partition [0, n).
using VertexRoleMap = std::map<std::string, std::vector<int>>;

bool roles_partition(const VertexRoleMap& roles, int n);

} // namespace cocrit

#endif
