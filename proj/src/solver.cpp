#include "cocrit/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "cocrit/errors.hpp"

namespace cocrit {

namespace {

    constexpr std::int8_t kUnassigned = -1;
    constexpr std::int8_t kRed = 0;
    constexpr std::int8_t kBlue = 1;

    using Clock = std::chrono::steady_clock;

    struct Search {
        const Graph& g;
        const int k;
        const SolverConfig& cfg;

        std::vector<Edge> edges; // static branch order
        std::vector<std::vector<int>> incident; // vertex -> edge ids
        std::vector<std::int8_t> value;
        std::array<VertexSet, kMaxVertices> red_adj{};
        std::array<int, kMaxVertices> blue_deg{};
        std::vector<int> trail;

        SolveStats stats;
        bool aborted = false;
        bool stop = false;
        std::size_t found = 0;
        Clock::time_point deadline{};
        bool has_deadline = false;

        // Callback invoked on each complete assignment; returns true to
        // keep enumerating.
        bool (*on_solution)(Search&, void*) = nullptr;
        void* user = nullptr;

        Search(const Graph& graph, int star_k, const SolverConfig& config)
            : g(graph)
            , k(star_k)
            , cfg(config)
            , incident(static_cast<std::size_t>(graph.order()))
        {
            edges = g.edges();
            if (cfg.order == EdgeOrderHeuristic::TriangleCountDesc) {
                std::stable_sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
                    const int ta = set_size(common_neighbors(g, a.u, a.v));
                    const int tb = set_size(common_neighbors(g, b.u, b.v));
                    if (ta != tb)
                        return ta > tb;
                    return a < b;
                });
            }
            value.assign(edges.size(), kUnassigned);
            for (std::size_t i = 0; i < edges.size(); ++i) {
                incident[static_cast<std::size_t>(edges[i].u)].push_back(static_cast<int>(i));
                incident[static_cast<std::size_t>(edges[i].v)].push_back(static_cast<int>(i));
            }
            if (cfg.time_budget_secs > 0) {
                deadline = Clock::now()
                    + std::chrono::duration_cast<Clock::duration>(
                        std::chrono::duration<double>(cfg.time_budget_secs));
                has_deadline = true;
            }
        }

        bool red_creates_c4(int u, int v) const
        {
            const VertexSet nu = red_adj[static_cast<std::size_t>(u)] & ~vertex_bit(v);
            const VertexSet nv = red_adj[static_cast<std::size_t>(v)] & ~vertex_bit(u);
            bool hit = false;
            for_each_vertex(nu, [&](int x) {
                if (red_adj[static_cast<std::size_t>(x)] & nv & ~vertex_bit(x))
                    hit = true;
            });
            return hit;
        }

        bool assign(int e, std::int8_t color)
        {
            const Edge& ed = edges[static_cast<std::size_t>(e)];
            if (color == kRed) {
                if (red_creates_c4(ed.u, ed.v))
                    return false;
                red_adj[static_cast<std::size_t>(ed.u)] |= vertex_bit(ed.v);
                red_adj[static_cast<std::size_t>(ed.v)] |= vertex_bit(ed.u);
            } else {
                if (blue_deg[static_cast<std::size_t>(ed.u)] >= k - 1
                    || blue_deg[static_cast<std::size_t>(ed.v)] >= k - 1)
                    return false;
                ++blue_deg[static_cast<std::size_t>(ed.u)];
                ++blue_deg[static_cast<std::size_t>(ed.v)];
            }
            value[static_cast<std::size_t>(e)] = color;
            trail.push_back(e);
            return true;
        }

        void undo_to(std::size_t mark)
        {
            while (trail.size() > mark) {
                const int e = trail.back();
                trail.pop_back();
                const Edge& ed = edges[static_cast<std::size_t>(e)];
                if (value[static_cast<std::size_t>(e)] == kRed) {
                    red_adj[static_cast<std::size_t>(ed.u)] &= ~vertex_bit(ed.v);
                    red_adj[static_cast<std::size_t>(ed.v)] &= ~vertex_bit(ed.u);
                } else {
                    --blue_deg[static_cast<std::size_t>(ed.u)];
                    --blue_deg[static_cast<std::size_t>(ed.v)];
                }
                value[static_cast<std::size_t>(e)] = kUnassigned;
            }
        }

        // Fixpoint of the two forcing rules. False on conflict.
        bool propagate()
        {
            bool changed = true;
            while (changed) {
                changed = false;
                for (int v = 0; v < g.order(); ++v) {
                    if (blue_deg[static_cast<std::size_t>(v)] != k - 1)
                        continue;
                    for (int e : incident[static_cast<std::size_t>(v)]) {
                        if (value[static_cast<std::size_t>(e)] != kUnassigned)
                            continue;
                        ++stats.propagations;
                        if (!assign(e, kRed))
                            return false;
                        changed = true;
                    }
                }
                for (std::size_t e = 0; e < edges.size(); ++e) {
                    if (value[e] != kUnassigned)
                        continue;
                    if (red_creates_c4(edges[e].u, edges[e].v)) {
                        ++stats.propagations;
                        if (!assign(static_cast<int>(e), kBlue))
                            return false;
                        changed = true;
                    }
                }
            }
            return true;
        }

        bool budget_exceeded()
        {
            if (cfg.node_budget > 0 && stats.nodes > cfg.node_budget)
                return true;
            if (has_deadline && (stats.nodes & 1023) == 0 && Clock::now() > deadline)
                return true;
            return false;
        }

        void dfs()
        {
            if (aborted || stop)
                return;
            if (!propagate())
                return;
            int branch = -1;
            for (std::size_t e = 0; e < edges.size(); ++e) {
                if (value[e] == kUnassigned) {
                    branch = static_cast<int>(e);
                    break;
                }
            }
            if (branch < 0) {
                ++found;
                if (!on_solution(*this, user))
                    stop = true;
                return;
            }
            for (std::int8_t color : {kRed, kBlue}) {
                ++stats.nodes;
                if (budget_exceeded()) {
                    aborted = true;
                    return;
                }
                const std::size_t mark = trail.size();
                if (assign(branch, color))
                    dfs();
                undo_to(mark);
                if (aborted || stop)
                    return;
            }
        }

        EdgeColoring current_coloring() const
        {
            std::vector<std::pair<Edge, Color>> assignment;
            assignment.reserve(edges.size());
            for (std::size_t e = 0; e < edges.size(); ++e)
                assignment.emplace_back(edges[e],
                    value[e] == kRed ? Color::Red : Color::Blue);
            return EdgeColoring(g, assignment);
        }

        void run()
        {
            const auto t0 = Clock::now();
            dfs();
            stats.wall_ms
                = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        }
    };

    void check_k(int k)
    {
        if (k < 1)
            throw std::invalid_argument("k must be at least 1");
    }

} // namespace

SolveOutcome find_critical_coloring(const Graph& g, int k, const SolverConfig& cfg)
{
    check_k(k);
    Search search(g, k, cfg);
    std::optional<EdgeColoring> witness;
    search.user = &witness;
    search.on_solution = [](Search& s, void* u) {
        auto& w = *static_cast<std::optional<EdgeColoring>*>(u);
        w = s.current_coloring();
        return false; // first witness suffices
    };
    search.run();

    SolveOutcome out;
    out.stats = search.stats;
    if (witness) {
        if (!is_critical(g, k, *witness))
            throw std::logic_error("solver produced a non-critical witness");
        out.status = SolveStatus::Witness;
        out.witness = std::move(witness);
    } else if (search.aborted) {
        out.status = SolveStatus::Aborted;
    } else {
        out.status = SolveStatus::Exhausted;
    }
    return out;
}

bool arrows(const Graph& g, int k, const SolverConfig& cfg)
{
    const SolveOutcome out = find_critical_coloring(g, k, cfg);
    if (out.status == SolveStatus::Aborted)
        throw indeterminate_error("arrowing search aborted on budget");
    return out.status == SolveStatus::Exhausted;
}

EnumerationOutcome enumerate_critical_colorings(const Graph& g, int k, const SolverConfig& cfg)
{
    check_k(k);
    Search search(g, k, cfg);
    EnumerationOutcome out;
    struct Ctx {
        EnumerationOutcome* out;
        const SolverConfig* cfg;
        const Graph* g;
        int k;
    } ctx{&out, &cfg, &g, k};
    search.user = &ctx;
    search.on_solution = [](Search& s, void* u) {
        auto& c = *static_cast<Ctx*>(u);
        EdgeColoring col = s.current_coloring();
        if (!is_critical(*c.g, c.k, col))
            throw std::logic_error("solver produced a non-critical witness");
        c.out->colorings.push_back(std::move(col));
        if (c.cfg->enumeration_limit > 0
            && c.out->colorings.size() >= c.cfg->enumeration_limit) {
            c.out->truncated = true;
            return false;
        }
        return c.cfg->block_witnesses;
    };
    search.run();
    if (search.aborted)
        out.truncated = true;
    out.stats = search.stats;
    return out;
}

EdgeColoring find_red_maximal_coloring(const Graph& g, int k, const SolverConfig& cfg)
{
    const SolveOutcome out = find_critical_coloring(g, k, cfg);
    if (out.status == SolveStatus::Aborted)
        throw indeterminate_error("critical-coloring search aborted on budget");
    if (out.status == SolveStatus::Exhausted)
        throw std::domain_error("graph admits no critical coloring");

    Graph red = out.witness->red();
    Graph blue = out.witness->blue();
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Edge& e : blue.edges()) {
            if (!contains_c4(red.with_edge(e))) {
                red.add_edge(e.u, e.v);
                blue.remove_edge(e.u, e.v);
                changed = true;
            }
        }
    }

    std::vector<Edge> red_edges = red.edges();
    EdgeColoring result = EdgeColoring::from_red_edges(g, red_edges);
    if (!is_critical(g, k, result))
        throw std::logic_error("red-maximal recoloring left a non-critical coloring");
    for (const Edge& e : result.blue().edges())
        if (!contains_c4(result.red().with_edge(e)))
            throw std::logic_error("red-maximal coloring is not locally maximal");
    return result;
}

std::optional<PrecheckRefutation> precheck_filters(const Graph& g, int k)
{
    check_k(k);
    for (const Edge& e : g.edges()) {
        const int t = set_size(common_neighbors(g, e.u, e.v));
        if (t >= 2 * k)
            return PrecheckRefutation{e, t, 2 * k};
    }
    return std::nullopt;
}

} // namespace cocrit
