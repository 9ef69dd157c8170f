#ifndef COCRIT_ISO_HPP
#define COCRIT_ISO_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "cocrit/coloring.hpp"
#include "cocrit/graph.hpp"

namespace cocrit {

// Exact canonical labeling by minimizing the packed upper-triangle
// adjacency bit-string over all vertex permutations, branch-and-bound
// pruned on the partial prefix. Supported for n <= 16 (128 bit-string
// bits); larger graphs raise capability_error.
inline constexpr int kCanonicalMaxVertices = 16;

struct CanonicalForm {
    int n = 0;
    std::array<std::uint64_t, 2> bits{}; // big-endian packed, zero padded
    std::array<int, kCanonicalMaxVertices> perm{}; // position -> original vertex

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b)
    {
        return a.n == b.n && a.bits == b.bits;
    }
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b)
    {
        if (auto c = a.n <=> b.n; c != 0)
            return c;
        return a.bits <=> b.bits;
    }
};

CanonicalForm canonical_form(const Graph& g);

// The canonically relabeled copy of g.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

// All automorphisms as position->image vertex vectors. Search is aborted
// with capability_error once `cap` maps have been collected (the group is
// larger than the caller is prepared to handle).
std::vector<std::vector<int>> automorphisms(const Graph& g, std::size_t cap = 1u << 20);

std::uint64_t automorphism_count(const Graph& g);

// Do the two colorings of the same base graph agree after relabeling by
// some automorphism of the base?
bool colorings_equivalent(const EdgeColoring& a, const EdgeColoring& b);

// Number of orbits of the given colorings under color-preserving
// automorphisms of g.
std::size_t count_coloring_orbits(const Graph& g, const std::vector<EdgeColoring>& colorings);

} // namespace cocrit

#endif
