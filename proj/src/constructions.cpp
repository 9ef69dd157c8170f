#include "cocrit/constructions.hpp"

#include <stdexcept>

#include "cocrit/errors.hpp"
#include "cocrit/graph6.hpp"

namespace cocrit {

namespace {

    std::vector<int> range(int lo, int hi)
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(hi - lo));
        for (int v = lo; v < hi; ++v)
            out.push_back(v);
        return out;
    }

} // namespace

std::pair<Graph, std::vector<std::vector<Edge>>> build_regular_factorized(int p, int k)
{
    if (k < 1)
        throw std::domain_error("factorized graph requires k >= 1");
    if (p % 2 != 0)
        throw std::domain_error("circle method requires p even, got p = " + std::to_string(p));
    if (p < k + 1)
        throw std::domain_error("k disjoint perfect matchings require p >= k + 1");

    Graph g(p);
    std::vector<std::vector<Edge>> matchings;
    matchings.reserve(static_cast<std::size_t>(k));
    const int m = p - 1; // rotating vertices
    for (int round = 0; round < k; ++round) {
        std::vector<Edge> matching;
        matching.push_back(make_edge(p - 1, round));
        for (int i = 1; i <= p / 2 - 1; ++i)
            matching.push_back(make_edge((round + i) % m, (round - i + m) % m));
        for (const Edge& e : matching)
            g.add_edge(e.u, e.v);
        matchings.push_back(std::move(matching));
    }
    return {g, matchings};
}

long long predicted_edge_count(int k, int n)
{
    if (k < 3)
        throw std::domain_error("family is defined for k >= 3");
    const long long eps = n % 2;
    const long long eps_star = k % 2;
    const long long min_n = 3LL * k + 3 + eps * (2 * eps_star - 1);
    if (n < min_n)
        throw std::domain_error("family requires n >= 3k + 3 + eps(2eps*-1) = "
            + std::to_string(min_n));
    long long numerator;
    if (eps_star == 1)
        numerator = (k + 2LL) * n - (2 + eps) * k + 4 * eps;
    else
        numerator = (k + 2LL) * n - (2 - eps) * k + 2 * (1 - 2 * eps);
    if (numerator % 2 != 0)
        throw std::logic_error("edge-count formula produced an odd numerator");
    return numerator / 2;
}

ConstructionBlueprint build_g(int k, int n)
{
    const long long predicted = predicted_edge_count(k, n); // validates (k, n)

    ConstructionBlueprint bp;
    bp.family = "c4-star";
    bp.k = k;
    bp.n = n;
    bp.epsilon = n % 2;
    bp.epsilon_star = k % 2;
    bp.p = n - 2 * k - 2 - bp.epsilon * (2 * bp.epsilon_star - 1);
    if (bp.p % 2 != 0 || bp.p < k + 1)
        throw std::logic_error("derived p violates the construction preconditions");

    const int a = 4 + (2 * bp.epsilon_star - 1) * bp.epsilon; // |A|
    const int x_begin = a;
    const int y_begin = a + (k - 1);
    const int r_begin = a + 2 * (k - 1);

    Graph g(n);

    // H = K_{k-1,k-1} on X x Y, minus xy for even k. x and y are the
    // first vertices of X and Y.
    for (int i = 0; i < k - 1; ++i)
        for (int j = 0; j < k - 1; ++j) {
            if (bp.epsilon_star == 0 && i == 0 && j == 0)
                continue;
            g.add_edge(x_begin + i, y_begin + j);
        }

    auto [r_graph, r_matchings] = build_regular_factorized(bp.p, k);
    for (const Edge& e : r_graph.edges())
        g.add_edge(r_begin + e.u, r_begin + e.v);
    for (auto& matching : r_matchings)
        for (Edge& e : matching)
            e = make_edge(r_begin + e.u, r_begin + e.v);
    bp.factorization = std::move(r_matchings);

    const int x1 = 0;
    const int x2 = 1;
    if (bp.epsilon_star == 1) {
        for (int v = x_begin; v < r_begin; ++v) {
            g.add_edge(x1, v);
            g.add_edge(x2, v);
        }
        for (int v : {1, 2, 3})
            g.add_edge(x1, v);
        for (int v = 3; v < a; ++v)
            g.add_edge(x2, v);
        for (int v = r_begin; v < n; ++v)
            g.add_edge(x2, v);
        for (int i = 2; i < a; ++i)
            for (int j = i + 1; j < a; ++j)
                g.add_edge(i, j);
    } else {
        for (int v = x_begin; v < r_begin; ++v) {
            g.add_edge(x1, v);
            g.add_edge(x2, v);
        }
        for (int v = 1; v < a; ++v)
            g.add_edge(x1, v);
        g.add_edge(x2, a - 1);
        for (int v = r_begin; v < n; ++v)
            g.add_edge(x2, v);
        g.add_edge(x_begin, a - 1); // x to x_{4-eps}
        if (bp.epsilon == 0) {
            g.add_edge(2, 3); // x3 to x4
            g.add_edge(2, y_begin); // x3 to y
        }
    }

    for (int i = 0; i < a; ++i)
        bp.roles["x" + std::to_string(i + 1)] = {i};
    bp.roles["X"] = range(x_begin, y_begin);
    bp.roles["Y"] = range(y_begin, r_begin);
    bp.roles["R"] = range(r_begin, n);

    if (g.edge_count() != predicted)
        throw std::logic_error("assembled graph has " + std::to_string(g.edge_count())
            + " edges, formula says " + std::to_string(predicted));
    bp.graph = std::move(g);
    return bp;
}

CertificateColoring certificate_coloring(const ConstructionBlueprint& bp,
    const SolverConfig& cfg)
{
    if (bp.family != "c4-star")
        throw std::invalid_argument("blueprint is not from build_g");

    if (bp.epsilon_star == 0) {
        const SolveOutcome out = find_critical_coloring(bp.graph, bp.k, cfg);
        if (out.status == SolveStatus::Aborted)
            throw indeterminate_error("certificate search aborted on budget");
        if (out.status == SolveStatus::Exhausted)
            throw std::logic_error("construction admits no critical coloring");
        return {*out.witness, CertificateColoring::Provenance::SolverFound};
    }

    const int k = bp.k;
    const int a = 4 + bp.epsilon;
    const int x_begin = a;
    const int y_begin = a + (k - 1);
    const int half = (k - 1) / 2; // |M1|, an equal split of the H-matching

    std::vector<Edge> red;
    for (int i = 0; i < k - 1; ++i)
        red.push_back(make_edge(x_begin + i, y_begin + i)); // M
    for (const Edge& e : bp.factorization.front())
        red.push_back(e);
    for (int i = 0; i < half; ++i) {
        red.push_back(make_edge(0, x_begin + i));
        red.push_back(make_edge(0, y_begin + i));
    }
    for (int v : {1, 2, 3})
        red.push_back(make_edge(0, v));
    for (int i = half; i < k - 1; ++i) {
        red.push_back(make_edge(1, x_begin + i));
        red.push_back(make_edge(1, y_begin + i));
    }
    for (int v = 3; v < a; ++v)
        red.push_back(make_edge(1, v));
    for (int v : bp.roles.at("R"))
        red.push_back(make_edge(1, v));

    CertificateColoring cert{EdgeColoring::from_red_edges(bp.graph, red),
        CertificateColoring::Provenance::ClosedForm};
    if (!is_critical(bp.graph, k, cert.coloring))
        throw std::logic_error("closed-form certificate coloring is not critical");
    return cert;
}

ConstructionBlueprint build_g_k2(int n)
{
    if (n < 5)
        throw std::domain_error("k = 2 family requires n >= 5");
    if (n == 7 || n == 8)
        throw capability_error("n = " + std::to_string(n)
            + " is unsupported: the construction degenerates to a 2-cycle");

    ConstructionBlueprint bp;
    bp.family = "c4-star-k2";
    bp.k = 2;
    bp.n = n;
    bp.epsilon = n % 2;
    bp.epsilon_star = 0;
    bp.p = 0;

    const int eps = bp.epsilon;
    const int cycle_begin = 6 - eps;
    const int cycle_len = n - 6 + eps;

    Graph g(n);
    const int x1 = 0, x2 = 1, x3 = 2;
    const int y1 = 3, y2 = 4;
    for (int i = 0; i < cycle_len; ++i)
        g.add_edge(cycle_begin + i, cycle_begin + (i + 1) % cycle_len);
    for (int i = 0; i < cycle_len; ++i)
        g.add_edge(x3, cycle_begin + i);
    g.add_edge(x3, x1);
    g.add_edge(x3, x2);
    g.add_edge(x3, y1);
    g.add_edge(x3, y2);
    if (eps == 0) {
        const int y3 = 5;
        g.add_edge(x1, x2);
        g.add_edge(x1, y1);
        g.add_edge(x1, y3);
        g.add_edge(x2, y2);
        g.add_edge(x2, y3);
    } else {
        g.add_edge(x2, x1);
        g.add_edge(x2, y1);
        g.add_edge(x2, y2);
    }

    bp.roles["x1"] = {x1};
    bp.roles["x2"] = {x2};
    bp.roles["x3"] = {x3};
    bp.roles["y1"] = {y1};
    bp.roles["y2"] = {y2};
    if (eps == 0)
        bp.roles["y3"] = {5};
    bp.roles["cycle"] = range(cycle_begin, n);

    if (g.edge_count() != 2 * n - 3)
        throw std::logic_error("k = 2 construction edge count mismatch");
    bp.graph = std::move(g);
    return bp;
}

CertificateColoring certificate_coloring_k2(const ConstructionBlueprint& bp)
{
    if (bp.family != "c4-star-k2")
        throw std::invalid_argument("blueprint is not from build_g_k2");

    const int eps = bp.epsilon;
    const int cycle_begin = 6 - eps;
    const int cycle_len = bp.n - 6 + eps;

    std::vector<Edge> red;
    for (int i = 0; i < cycle_len; ++i)
        red.push_back(make_edge(2, cycle_begin + i)); // x3 red-complete to the cycle
    for (int i = 0; i < cycle_len; i += 2) // one of the two cycle matchings
        red.push_back(make_edge(cycle_begin + i, cycle_begin + (i + 1) % cycle_len));
    if (eps == 0) {
        for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 5}, {2, 4}})
            red.push_back(make_edge(u, v));
    } else {
        for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {1, 4}, {2, 3}})
            red.push_back(make_edge(u, v));
    }

    CertificateColoring cert{EdgeColoring::from_red_edges(bp.graph, red),
        CertificateColoring::Provenance::ClosedForm};
    if (!is_critical(bp.graph, 2, cert.coloring))
        throw std::logic_error("k = 2 certificate coloring is not critical");
    return cert;
}

nlohmann::ordered_json blueprint_to_json(const ConstructionBlueprint& bp)
{
    nlohmann::ordered_json j;
    j["family"] = bp.family;
    j["k"] = bp.k;
    j["n"] = bp.n;
    j["epsilon"] = bp.epsilon;
    j["epsilon_star"] = bp.epsilon_star;
    if (bp.family == "c4-star")
        j["p"] = bp.p;
    j["graph6"] = encode_graph6(bp.graph);
    nlohmann::ordered_json roles;
    for (const auto& [name, verts] : bp.roles)
        roles[name] = verts;
    j["roles"] = std::move(roles);
    if (!bp.factorization.empty()) {
        auto fact = nlohmann::ordered_json::array();
        for (const auto& matching : bp.factorization) {
            auto m = nlohmann::ordered_json::array();
            for (const Edge& e : matching)
                m.push_back({e.u, e.v});
            fact.push_back(std::move(m));
        }
        j["factorization"] = std::move(fact);
    }
    return j;
}

} // namespace cocrit
