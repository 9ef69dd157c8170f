#include <doctest.h>

#include "cocrit/bounds.hpp"
#include "cocrit/cocritical.hpp"
#include "cocrit/constructions.hpp"
#include "cocrit/errors.hpp"

using namespace cocrit;

TEST_CASE("bound formulas")
{
    CHECK(lower_bound_general(2, 5) == Rational(6, 1));
    CHECK(lower_bound_general(3, 13) == Rational(51, 2));
    CHECK(lower_bound_general(3, 13).ceil() == 26);
    CHECK(lower_bound_general(2, 10) == Rational(16, 1));
    CHECK_THROWS_AS((void)lower_bound_general(1, 10), std::domain_error);
    CHECK_THROWS_AS((void)lower_bound_general(3, 5), std::domain_error);

    CHECK(lower_bound_k2(5) == 7);
    CHECK(lower_bound_k2(10) == 17);
    CHECK(lower_bound_k2(6) == 9);
    CHECK_THROWS_AS((void)lower_bound_k2(4), std::domain_error);

    CHECK(ramsey_upper(2) == 5);
    CHECK(ramsey_upper(5) == 9);
    CHECK(ramsey_upper(10) == 15);
    CHECK_THROWS_AS((void)ramsey_upper(1), std::domain_error);

    CHECK(c4_saturation_lower_bound(5) == 5);
    CHECK(c4_saturation_lower_bound(6) == 6);
    CHECK(c4_saturation_lower_bound(7) == 8);

    CHECK(isqrt_floor(0) == 0);
    CHECK(isqrt_floor(1) == 1);
    CHECK(isqrt_floor(8) == 2);
    CHECK(isqrt_floor(9) == 3);

    CHECK(Rational(51, 2).floor() == 25);
    CHECK(Rational(-3, 2).ceil() == -1);
    CHECK(Rational(-3, 2).floor() == -2);
    CHECK(Rational(4, 2) == Rational(2, 1));
}

TEST_CASE("C5 is not co-critical: chords still admit colorings")
{
    const CocriticalReport report = is_cocritical(Graph::cycle(5), 2);
    CHECK_FALSE(report.verdict);
    CHECK(report.admits_critical_coloring);
    CHECK_FALSE(report.failures.empty());
    for (const NonEdgeCheck& f : report.failures)
        CHECK(f.outcome == NonEdgeCheck::Outcome::AdmitsColoring);
    CHECK(report.non_edge_checks.size() == 5);
}

TEST_CASE("co-criticality input validation")
{
    CHECK_THROWS_AS((void)is_cocritical(Graph::complete(4), 2), std::domain_error);
    CHECK_THROWS_AS((void)is_cocritical(Graph::cycle(5), 1), std::invalid_argument);
    CocriticalConfig strangled;
    strangled.solver.node_budget = 1;
    CHECK_THROWS_AS((void)is_cocritical(build_g_k2(9).graph, 2, strangled),
        indeterminate_error);
}

TEST_CASE("k2 flagship: build_g_k2(5) verifies with 7 edges")
{
    const ConstructionBlueprint bp = build_g_k2(5);
    const CocriticalReport report = is_cocritical(bp.graph, 2);
    CHECK(report.verdict);
    CHECK(report.edge_count == 7);
    REQUIRE(report.bound_k2.has_value());
    CHECK(*report.bound_k2 == 7);
    REQUIRE(report.decomposition.has_value());
    CHECK(report.decomposition->red_edges + report.decomposition->blue_edges == 7);

    const nlohmann::ordered_json j = report_to_json(report, bp.graph);
    CHECK(j["verdict"] == true);
    CHECK(j["e"] == 7);
    CHECK(j["failures"].empty());
    CHECK(j["stats"]["non_edges"].size() == report.non_edge_checks.size());
}

TEST_CASE("lemma structure diagnostics")
{
    const ConstructionBlueprint bp = build_g_k2(5);
    const CertificateColoring cert = certificate_coloring_k2(bp);
    const LemmaReport report = check_lemma_structures(bp.graph, 2, cert.coloring);
    CHECK(report.s_is_clique);
    CHECK(report.alpha_blue_s <= 3);
    CHECK(report.all_hold);
    CHECK(report.s_size_bound_formula == 2); // k + floor(sqrt(k-2)) at k = 2
    CHECK(report.s_size_bound_k2_case == 3);

    // a critical coloring is required
    const EdgeColoring all_blue = EdgeColoring::monochromatic(bp.graph, Color::Blue);
    CHECK_THROWS_AS((void)check_lemma_structures(bp.graph, 2, all_blue), std::domain_error);

    // all-red coloring of a C4-free graph: diagnostics still computable
    const Graph c5 = Graph::cycle(5);
    const LemmaReport allred
        = check_lemma_structures(c5, 2, EdgeColoring::monochromatic(c5, Color::Red));
    CHECK(allred.s_vertices.size() == 5); // everyone has blue degree 0
    CHECK_FALSE(allred.s_is_clique); // C5 is not a clique: hypotheses fail, report only
}

TEST_CASE("removing an edge from a co-critical graph breaks co-criticality")
{
    // plumbing sanity: the deleted edge can be added back and colored
    const Graph g = build_g_k2(6).graph;
    REQUIRE(is_cocritical(g, 2).verdict);
    for (const Edge& e : g.edges()) {
        Graph sub = g;
        sub.remove_edge(e.u, e.v);
        const CocriticalReport report = is_cocritical(sub, 2);
        CHECK_FALSE(report.verdict);
        if (report.admits_critical_coloring) {
            bool failure_at_e = false;
            for (const NonEdgeCheck& f : report.failures)
                failure_at_e = failure_at_e || f.edge == e;
            CHECK(failure_at_e);
        }
    }
}

TEST_CASE("reports are deterministic modulo timing")
{
    const Graph g = build_g_k2(6).graph;
    auto run = [&] {
        nlohmann::ordered_json j = report_to_json(is_cocritical(g, 2), g);
        for (auto& entry : j["stats"]["non_edges"])
            entry.erase("time_ms");
        return j;
    };
    CHECK(run() == run());
}

TEST_CASE("independence number")
{
    const Graph c5 = Graph::cycle(5);
    CHECK(independence_number(c5, c5.vertex_mask()) == 2);
    const Graph empty(6);
    CHECK(independence_number(empty, empty.vertex_mask()) == 6);
    const Graph k4 = Graph::complete(4);
    CHECK(independence_number(k4, k4.vertex_mask()) == 1);
    CHECK(independence_number(k4, 0) == 0);
}
