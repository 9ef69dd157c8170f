#ifndef COCRIT_CONSTRUCTIONS_HPP
#define COCRIT_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cocrit/coloring.hpp"
#include "cocrit/graph.hpp"
#include "cocrit/solver.hpp"

namespace cocrit {

// Parameters, vertex roles and matching data of a built family member.
// Vertex numbering is fixed: the A-vertices x1, x2, ... come first, then
// X, then Y, then the vertices of R (for the k >= 3 family), or
// x1, x2, x3, y1, ..., then the cycle (for the k = 2 family). The
// distinguished vertices x and y are the first members of X and Y.
struct ConstructionBlueprint {
    std::string family; // "c4-star" or "c4-star-k2"
    int k = 0;
    int n = 0;
    int epsilon = 0; // n mod 2
    int epsilon_star = 0; // k mod 2
    int p = 0; // |R| (k >= 3 family only)
    VertexRoleMap roles;
    std::vector<std::vector<Edge>> factorization; // k disjoint perfect matchings of R
    Graph graph;
};

struct CertificateColoring {
    enum class Provenance : std::uint8_t { ClosedForm, SolverFound };

    EdgeColoring coloring;
    Provenance provenance = Provenance::ClosedForm;
};

// Union of the first k rounds of the circle-method one-factorization of
// K_p: a k-regular graph on p vertices together with the k pairwise
// disjoint perfect matchings that compose it. Requires p even, p >= k+1.
std::pair<Graph, std::vector<std::vector<Edge>>> build_regular_factorized(int p, int k);

// The minimal-size co-critical family member for k >= 3:
// disjoint H (= K_{k-1,k-1}, minus the edge xy when k is even) and R,
// plus the joined apex vertices A = {x1, ...}. Requires
// n >= 3k + 3 + epsilon*(2*epsilon_star - 1).
ConstructionBlueprint build_g(int k, int n);

// Edge count of build_g(k, n) in closed form.
long long predicted_edge_count(int k, int n);

// Certificate critical coloring for build_g output. Odd k uses the
// closed-form coloring (red: a perfect matching of H, one matching of R,
// the split star edges at x1/x2); even k has no closed form and the
// certificate is produced by the solver.
CertificateColoring certificate_coloring(const ConstructionBlueprint& blueprint,
    const SolverConfig& cfg = {});

// The k = 2 family: a cycle C_{n-6+epsilon} plus 6-epsilon joined
// vertices, 2n-3 edges. n in {7, 8} is rejected (the construction would
// need a 2-cycle).
ConstructionBlueprint build_g_k2(int n);

CertificateColoring certificate_coloring_k2(const ConstructionBlueprint& blueprint);

nlohmann::ordered_json blueprint_to_json(const ConstructionBlueprint& blueprint);

} // namespace cocrit

#endif
