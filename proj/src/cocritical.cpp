#include "cocrit/cocritical.hpp"

#include <stdexcept>

#include "cocrit/errors.hpp"
#include "cocrit/graph6.hpp"
#include "cocrit/parallel.hpp"

namespace cocrit {

namespace {

    int blue_degree(const EdgeColoring& c, int v) { return c.blue().degree(v); }

} // namespace

CocriticalReport is_cocritical(const Graph& g, int k, const CocriticalConfig& cfg)
{
    if (k < 2)
        throw std::invalid_argument("co-criticality is defined for k >= 2");
    if (g.is_complete())
        throw std::domain_error("complete graphs are excluded from co-criticality");

    CocriticalReport report;
    report.k = k;
    report.n = g.order();
    report.edge_count = g.edge_count();
    if (report.n >= ramsey_upper(k))
        report.bound_general = lower_bound_general(k, report.n);
    if (k == 2 && report.n >= 5)
        report.bound_k2 = lower_bound_k2(report.n);

    const SolveOutcome base = find_critical_coloring(g, k, cfg.solver);
    report.total_stats = base.stats;
    if (base.status == SolveStatus::Aborted)
        throw indeterminate_error("base critical-coloring search aborted on budget");
    report.admits_critical_coloring = base.status == SolveStatus::Witness;
    if (report.admits_critical_coloring)
        report.witness = base.witness;

    const std::vector<Edge> candidates = non_edges(g);
    std::vector<NonEdgeCheck> checks(candidates.size());
    std::vector<bool> aborted(candidates.size(), false);

    parallel_for(candidates.size(), cfg.jobs, [&](std::size_t i) {
        NonEdgeCheck& check = checks[i];
        check.edge = candidates[i];
        const Graph extended = g.with_edge(candidates[i]);
        if (precheck_filters(extended, k)) {
            check.outcome = NonEdgeCheck::Outcome::RefutedByPrecheck;
            return;
        }
        const SolveOutcome out = find_critical_coloring(extended, k, cfg.solver);
        check.stats = out.stats;
        switch (out.status) {
        case SolveStatus::Exhausted:
            check.outcome = NonEdgeCheck::Outcome::RefutedBySearch;
            break;
        case SolveStatus::Witness:
            check.outcome = NonEdgeCheck::Outcome::AdmitsColoring;
            break;
        case SolveStatus::Aborted:
            aborted[i] = true;
            break;
        }
    });

    for (std::size_t i = 0; i < checks.size(); ++i) {
        if (aborted[i])
            throw indeterminate_error("non-edge subproblem aborted on budget");
        report.total_stats.nodes += checks[i].stats.nodes;
        report.total_stats.propagations += checks[i].stats.propagations;
        if (checks[i].outcome == NonEdgeCheck::Outcome::AdmitsColoring)
            report.failures.push_back(checks[i]);
    }
    report.non_edge_checks = std::move(checks);
    report.verdict = report.admits_critical_coloring && report.failures.empty();

    if (report.verdict) {
        const EdgeColoring red_max = find_red_maximal_coloring(g, k, cfg.solver);
        RedMaximalDecomposition decomp;
        decomp.red_edges = red_max.red_count();
        decomp.blue_edges = red_max.blue_count();
        for (int v = 0; v < g.order(); ++v)
            if (blue_degree(red_max, v) <= k - 2)
                ++decomp.s_size;
        report.decomposition = decomp;

        if (report.bound_k2 && report.edge_count < *report.bound_k2)
            throw std::logic_error("verified co-critical graph violates the 2n-3 bound");
    }
    return report;
}

nlohmann::ordered_json report_to_json(const CocriticalReport& report, const Graph& g)
{
    nlohmann::ordered_json j;
    j["verdict"] = report.verdict;
    j["graph6"] = encode_graph6(g);
    j["k"] = report.k;
    j["n"] = report.n;
    j["e"] = report.edge_count;
    j["admits_critical_coloring"] = report.admits_critical_coloring;

    nlohmann::ordered_json bounds;
    if (report.bound_general) {
        bounds["general"] = {
            {"num", report.bound_general->num},
            {"den", report.bound_general->den},
            {"ceil", report.bound_general->ceil()},
        };
    }
    if (report.bound_k2)
        bounds["k2"] = *report.bound_k2;
    j["bounds"] = std::move(bounds);

    if (report.witness)
        j["witness"] = coloring_to_json(*report.witness, report.k);
    else
        j["witness"] = nullptr;

    auto failures = nlohmann::ordered_json::array();
    for (const NonEdgeCheck& f : report.failures)
        failures.push_back({
            {"edge", {f.edge.u, f.edge.v}},
            {"reason", "admits-coloring-after-add"},
        });
    j["failures"] = std::move(failures);

    if (report.decomposition) {
        j["red_maximal"] = {
            {"red_edges", report.decomposition->red_edges},
            {"blue_edges", report.decomposition->blue_edges},
            {"s_size", report.decomposition->s_size},
        };
    }

    auto non_edges_json = nlohmann::ordered_json::array();
    for (const NonEdgeCheck& c : report.non_edge_checks) {
        const char* outcome = nullptr;
        switch (c.outcome) {
        case NonEdgeCheck::Outcome::RefutedByPrecheck:
            outcome = "refuted-by-precheck";
            break;
        case NonEdgeCheck::Outcome::RefutedBySearch:
            outcome = "refuted-by-search";
            break;
        case NonEdgeCheck::Outcome::AdmitsColoring:
            outcome = "admits-coloring-after-add";
            break;
        }
        non_edges_json.push_back({
            {"edge", {c.edge.u, c.edge.v}},
            {"outcome", outcome},
            {"nodes", c.stats.nodes},
            {"time_ms", c.stats.wall_ms},
        });
    }
    j["stats"] = {
        {"nodes", report.total_stats.nodes},
        {"propagations", report.total_stats.propagations},
        {"non_edges", std::move(non_edges_json)},
    };
    return j;
}

int independence_number(const Graph& g, VertexSet within)
{
    if (within == 0)
        return 0;
    const int v = std::countr_zero(within);
    // Vertices isolated inside `within` always join a maximum set.
    if ((g.neighbors(v) & within) == 0)
        return 1 + independence_number(g, within & ~vertex_bit(v));
    const int with_v
        = 1 + independence_number(g, within & ~(g.neighbors(v) | vertex_bit(v)));
    const int without_v = independence_number(g, within & ~vertex_bit(v));
    return std::max(with_v, without_v);
}

LemmaReport check_lemma_structures(const Graph& g, int k, const EdgeColoring& c)
{
    if (k < 2)
        throw std::invalid_argument("lemma diagnostics require k >= 2");
    if (!is_critical(g, k, c))
        throw std::domain_error("lemma diagnostics require a critical coloring");

    LemmaReport report;
    VertexSet s_mask = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (blue_degree(c, v) <= k - 2) {
            report.s_vertices.push_back(v);
            s_mask |= vertex_bit(v);
        }
    }

    report.s_is_clique = true;
    for (std::size_t i = 0; i < report.s_vertices.size() && report.s_is_clique; ++i)
        for (std::size_t j = i + 1; j < report.s_vertices.size(); ++j)
            if (!g.has_edge(report.s_vertices[i], report.s_vertices[j])) {
                report.s_is_clique = false;
                break;
            }

    report.alpha_blue_s = independence_number(c.blue(), s_mask);
    report.s_size_bound_formula = k + isqrt_floor(k - 2);

    bool edges_ok = true;
    for (const Edge& e : g.edges()) {
        LemmaEdgeStat stat;
        stat.edge = e;
        const VertexSet shared = common_neighbors(g, e.u, e.v);
        stat.common = set_size(shared);
        stat.red_common = set_size(common_neighbors(c.red(), e.u, e.v));

        if (stat.common >= 2 * k - 2)
            stat.ok_red_when_dense
                = c.color_of(e.u, e.v) == Color::Red && stat.red_common <= 1;
        stat.ok_triangle_cap = stat.common <= 2 * k - 1;
        if (stat.common == 2 * k - 1) {
            const int blue_u = set_size(c.blue().neighbors(e.u) & shared);
            const int blue_v = set_size(c.blue().neighbors(e.v) & shared);
            const VertexSet blue_both = c.blue().neighbors(e.u) & c.blue().neighbors(e.v);
            stat.ok_tight_split = stat.red_common == 1 && blue_u == k - 1
                && blue_v == k - 1 && blue_both == 0;
        }
        edges_ok = edges_ok && stat.ok_red_when_dense && stat.ok_triangle_cap
            && stat.ok_tight_split;
        report.edges.push_back(stat);
    }

    report.all_hold = report.s_is_clique && report.alpha_blue_s <= 3 && edges_ok;
    return report;
}

} // namespace cocrit
