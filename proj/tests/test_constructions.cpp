#include <doctest.h>

#include <set>

#include "cocrit/constructions.hpp"
#include "cocrit/errors.hpp"
#include "cocrit/graph6.hpp"
#include "cocrit/iso.hpp"

using namespace cocrit;

namespace {

bool is_perfect_matching_of(const std::vector<Edge>& matching, const Graph& g)
{
    std::set<int> covered;
    for (const Edge& e : matching) {
        if (!g.has_edge(e.u, e.v))
            return false;
        if (!covered.insert(e.u).second || !covered.insert(e.v).second)
            return false;
    }
    return static_cast<int>(covered.size()) == g.order();
}

// red edges inside the vertex set `verts`, as edges of the subgraph
std::vector<Edge> red_inside(const EdgeColoring& c, const std::vector<int>& verts)
{
    VertexSet mask = 0;
    for (int v : verts)
        mask |= vertex_bit(v);
    std::vector<Edge> out;
    for (const Edge& e : c.red().edges())
        if ((mask & vertex_bit(e.u)) && (mask & vertex_bit(e.v)))
            out.push_back(e);
    return out;
}

} // namespace

TEST_CASE("circle-method factorization")
{
    {
        const auto [g, matchings] = build_regular_factorized(4, 3);
        CHECK(g == Graph::complete(4));
        REQUIRE(matchings.size() == 3);
        for (const auto& m : matchings)
            CHECK(is_perfect_matching_of(m, g));
    }
    {
        const auto [g, matchings] = build_regular_factorized(6, 4);
        CHECK(g.edge_count() == 12);
        for (int v = 0; v < 6; ++v)
            CHECK(g.degree(v) == 4);
        REQUIRE(matchings.size() == 4);
        std::set<Edge> seen;
        for (const auto& m : matchings) {
            CHECK(is_perfect_matching_of(m, g));
            for (const Edge& e : m)
                CHECK(seen.insert(e).second); // pairwise disjoint
        }
        CHECK(seen.size() == 12); // union is the whole edge set
    }
    CHECK(build_regular_factorized(6, 5).first == Graph::complete(6));
    CHECK_THROWS_AS(build_regular_factorized(5, 3), std::domain_error);
    CHECK_THROWS_AS(build_regular_factorized(4, 4), std::domain_error);
}

TEST_CASE("edge counts match the closed form across the validity range")
{
    for (int k = 3; k <= 6; ++k) {
        for (int n = 3 * k; n <= 30; ++n) {
            const int eps = n % 2;
            const int eps_star = k % 2;
            const int min_n = 3 * k + 3 + eps * (2 * eps_star - 1);
            if (n < min_n) {
                CHECK_THROWS_AS((void)build_g(k, n), std::domain_error);
                continue;
            }
            const ConstructionBlueprint bp = build_g(k, n);
            CAPTURE(k);
            CAPTURE(n);
            CHECK(bp.graph.order() == n);
            CHECK(bp.graph.edge_count() == predicted_edge_count(k, n));
            CHECK(roles_partition(bp.roles, n));
        }
    }
    CHECK(build_g(3, 13).graph.edge_count() == 30);
    CHECK(build_g(4, 15).graph.edge_count() == 42);
    CHECK(build_g(4, 16).graph.edge_count() == 45);
    CHECK(predicted_edge_count(3, 13) == 30);
    CHECK(predicted_edge_count(4, 15) == 42);
    CHECK(predicted_edge_count(4, 16) == 45);
    // symbolic check of the odd-k branch: k = 7, even n gives (9n - 14)/2
    for (int n = 24; n <= 30; n += 2)
        CHECK(predicted_edge_count(7, n) == (9 * n - 14) / 2);
    CHECK_THROWS_AS((void)build_g(2, 20), std::domain_error);
}

TEST_CASE("structure of the k >= 3 family")
{
    for (auto [k, n] : {std::pair{3, 13}, {4, 15}, {4, 16}, {5, 18}, {6, 22}}) {
        const ConstructionBlueprint bp = build_g(k, n);
        CAPTURE(k);
        CAPTURE(n);
        const int eps = n % 2;
        const int eps_star = k % 2;

        // x1x2 lies in exactly 2k-1 triangles
        CHECK(set_size(common_neighbors(bp.graph, 0, 1)) == 2 * k - 1);

        // degree k+1 on X, Y and R, except the H-vertex y (degree k)
        // when both the removed H-edge and the odd-n apex are in play
        const int y_vertex = bp.roles.at("Y").front();
        for (const char* role : {"X", "Y", "R"})
            for (int v : bp.roles.at(role)) {
                if (eps_star == 0 && eps == 1 && v == y_vertex)
                    CHECK(bp.graph.degree(v) == k);
                else
                    CHECK(bp.graph.degree(v) == k + 1);
            }

        // R is k-regular and carries k disjoint perfect matchings
        REQUIRE(bp.factorization.size() == static_cast<std::size_t>(k));
        std::set<Edge> r_edges;
        for (const auto& m : bp.factorization) {
            std::set<int> covered;
            for (const Edge& e : m) {
                CHECK(bp.graph.has_edge(e.u, e.v));
                CHECK(covered.insert(e.u).second);
                CHECK(covered.insert(e.v).second);
                CHECK(r_edges.insert(e).second);
            }
            CHECK(covered.size() == static_cast<std::size_t>(bp.p));
        }
        CHECK(r_edges.size() == static_cast<std::size_t>(k * bp.p / 2));
    }
}

TEST_CASE("certificate coloring for odd k is the closed-form sigma")
{
    const ConstructionBlueprint bp = build_g(3, 13);
    const CertificateColoring cert = certificate_coloring(bp);
    CHECK(cert.provenance == CertificateColoring::Provenance::ClosedForm);
    CHECK(is_critical(bp.graph, 3, cert.coloring));
    CHECK(cert.coloring.color_of(0, 1) == Color::Red); // x1x2 red

    // every vertex of X and Y has blue degree exactly k-1 = 2
    for (const char* role : {"X", "Y"})
        for (int v : bp.roles.at(role))
            CHECK(cert.coloring.blue().degree(v) == 2);

    // red restricted to H and to R is a perfect matching of each
    std::vector<int> h_verts = bp.roles.at("X");
    for (int v : bp.roles.at("Y"))
        h_verts.push_back(v);
    std::set<int> covered;
    for (const Edge& e : red_inside(cert.coloring, h_verts)) {
        CHECK(covered.insert(e.u).second);
        CHECK(covered.insert(e.v).second);
    }
    CHECK(covered.size() == h_verts.size());

    covered.clear();
    for (const Edge& e : red_inside(cert.coloring, bp.roles.at("R"))) {
        CHECK(covered.insert(e.u).second);
        CHECK(covered.insert(e.v).second);
    }
    CHECK(covered.size() == bp.roles.at("R").size());
}

TEST_CASE("certificate coloring for even k comes from the solver")
{
    const ConstructionBlueprint bp = build_g(4, 15);
    const CertificateColoring cert = certificate_coloring(bp);
    CHECK(cert.provenance == CertificateColoring::Provenance::SolverFound);
    CHECK(is_critical(bp.graph, 4, cert.coloring));

    // red within R is a perfect matching of R
    std::set<int> covered;
    for (const Edge& e : red_inside(cert.coloring, bp.roles.at("R"))) {
        CHECK(covered.insert(e.u).second);
        CHECK(covered.insert(e.v).second);
    }
    CHECK(covered.size() == bp.roles.at("R").size());
}

TEST_CASE("k = 2 family")
{
    for (int n : {5, 6, 9, 10, 11, 12, 15, 16, 19, 20}) {
        const ConstructionBlueprint bp = build_g_k2(n);
        CAPTURE(n);
        CHECK(bp.graph.order() == n);
        CHECK(bp.graph.edge_count() == 2 * n - 3);
        CHECK(roles_partition(bp.roles, n));
        const CertificateColoring cert = certificate_coloring_k2(bp);
        CHECK(cert.provenance == CertificateColoring::Provenance::ClosedForm);
        CHECK(is_critical(bp.graph, 2, cert.coloring));
        // blue is a matching
        CHECK(max_star(cert.coloring.blue()) <= 1);
        // red is C4-free
        CHECK_FALSE(contains_c4(cert.coloring.red()));
    }
    {
        const ConstructionBlueprint bp = build_g_k2(10);
        CHECK(bp.roles.at("cycle").size() == 4); // a C4 inside the host graph
    }
    {
        const CertificateColoring cert = certificate_coloring_k2(build_g_k2(5));
        CHECK(cert.coloring.red_count() == 5);
        CHECK(cert.coloring.blue_count() == 2);
    }
    CHECK_THROWS_AS((void)build_g_k2(7), capability_error);
    CHECK_THROWS_AS((void)build_g_k2(8), capability_error);
    CHECK_THROWS_AS((void)build_g_k2(4), std::domain_error);
}

TEST_CASE("builders are deterministic")
{
    CHECK(encode_graph6(build_g(3, 13).graph) == encode_graph6(build_g(3, 13).graph));
    CHECK(encode_graph6(build_g(4, 16).graph) == encode_graph6(build_g(4, 16).graph));
    CHECK(encode_graph6(build_g_k2(12).graph) == encode_graph6(build_g_k2(12).graph));
    CHECK(blueprint_to_json(build_g(5, 18)) == blueprint_to_json(build_g(5, 18)));
    // and the closed-form certificate is a fixed coloring
    const ConstructionBlueprint bp = build_g(3, 13);
    CHECK(certificate_coloring(bp).coloring == certificate_coloring(bp).coloring);
}
