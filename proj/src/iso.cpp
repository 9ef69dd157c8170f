#include "cocrit/iso.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "cocrit/errors.hpp"
#include "cocrit/graph6.hpp"

namespace cocrit {

namespace {

    using Bits = std::array<std::uint64_t, 2>;

    void set_bit(Bits& b, int pos)
    {
        b[static_cast<std::size_t>(pos >> 6)] |= std::uint64_t{1} << (63 - (pos & 63));
    }

    std::uint32_t extract_bits(const Bits& b, int base, int len)
    {
        std::uint32_t out = 0;
        for (int i = 0; i < len; ++i) {
            const int pos = base + i;
            const std::uint64_t word = b[static_cast<std::size_t>(pos >> 6)];
            out = (out << 1) | static_cast<std::uint32_t>((word >> (63 - (pos & 63))) & 1);
        }
        return out;
    }

    struct CanonicalSearch {
        const Graph& g;
        int n;
        std::array<int, kCanonicalMaxVertices> order{}; // candidate try order
        std::array<int, kCanonicalMaxVertices> perm{};
        VertexSet used = 0;
        Bits cur{};
        Bits best{};
        std::array<int, kCanonicalMaxVertices> best_perm{};

        explicit CanonicalSearch(const Graph& graph)
            : g(graph)
            , n(graph.order())
        {
            best.fill(~std::uint64_t{0});
            std::vector<int> by_degree(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                by_degree[static_cast<std::size_t>(v)] = v;
            std::stable_sort(by_degree.begin(), by_degree.end(),
                [&](int a, int b) { return g.degree(a) < g.degree(b); });
            for (int i = 0; i < n; ++i)
                order[static_cast<std::size_t>(i)] = by_degree[static_cast<std::size_t>(i)];
        }

        // pos: next position to fill; equal_prefix: cur so far matches best.
        void dfs(int pos, bool equal_prefix)
        {
            if (pos == n) {
                if (cur < best) {
                    best = cur;
                    best_perm = perm;
                }
                return;
            }
            const int base = pos * (pos - 1) / 2;
            const std::uint32_t best_col
                = equal_prefix ? extract_bits(best, base, pos) : 0;
            for (int idx = 0; idx < n; ++idx) {
                const int cand = order[static_cast<std::size_t>(idx)];
                if (used & vertex_bit(cand))
                    continue;
                std::uint32_t col = 0;
                const VertexSet nb = g.neighbors(cand);
                for (int i = 0; i < pos; ++i)
                    col = (col << 1)
                        | static_cast<std::uint32_t>(
                            (nb >> perm[static_cast<std::size_t>(i)]) & 1);
                bool child_equal = equal_prefix;
                if (equal_prefix) {
                    if (col > best_col)
                        continue;
                    child_equal = (col == best_col);
                }
                perm[static_cast<std::size_t>(pos)] = cand;
                used |= vertex_bit(cand);
                const Bits saved = cur;
                for (int i = 0; i < pos; ++i)
                    if (col & (std::uint32_t{1} << (pos - 1 - i)))
                        set_bit(cur, base + i);
                dfs(pos + 1, child_equal);
                cur = saved;
                used &= ~vertex_bit(cand);
            }
        }
    };

    std::vector<int> degree_sequence(const Graph& g)
    {
        std::vector<int> d(static_cast<std::size_t>(g.order()));
        for (int v = 0; v < g.order(); ++v)
            d[static_cast<std::size_t>(v)] = g.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    }

    Graph apply_permutation(const Graph& g, const std::vector<int>& image)
    {
        Graph out(g.order());
        for (const Edge& e : g.edges())
            out.add_edge(image[static_cast<std::size_t>(e.u)],
                image[static_cast<std::size_t>(e.v)]);
        return out;
    }

    void automorphism_dfs(const Graph& g, std::vector<int>& image, VertexSet used, int pos,
        std::size_t cap, std::vector<std::vector<int>>& found)
    {
        const int n = g.order();
        if (pos == n) {
            if (found.size() >= cap)
                throw capability_error("automorphism group larger than cap "
                    + std::to_string(cap));
            found.push_back(image);
            return;
        }
        for (int cand = 0; cand < n; ++cand) {
            if (used & vertex_bit(cand))
                continue;
            if (g.degree(cand) != g.degree(pos))
                continue;
            bool consistent = true;
            for (int j = 0; j < pos && consistent; ++j)
                if (g.has_edge(pos, j)
                    != g.has_edge(cand, image[static_cast<std::size_t>(j)]))
                    consistent = false;
            if (!consistent)
                continue;
            image[static_cast<std::size_t>(pos)] = cand;
            automorphism_dfs(g, image, used | vertex_bit(cand), pos + 1, cap, found);
        }
    }

} // namespace

CanonicalForm canonical_form(const Graph& g)
{
    if (g.order() > kCanonicalMaxVertices)
        throw capability_error("canonical labeling supports up to "
            + std::to_string(kCanonicalMaxVertices) + " vertices, got "
            + std::to_string(g.order()));
    CanonicalSearch search(g);
    search.dfs(0, true);
    CanonicalForm out;
    out.n = g.order();
    out.bits = search.best;
    out.perm = search.best_perm;
    return out;
}

Graph canonical_graph(const Graph& g)
{
    const CanonicalForm cf = canonical_form(g);
    Graph out(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.has_edge(cf.perm[static_cast<std::size_t>(i)],
                    cf.perm[static_cast<std::size_t>(j)]))
                out.add_edge(i, j);
    return out;
}

bool are_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order())
        return false;
    if (a.edge_count() != b.edge_count())
        return false;
    if (degree_sequence(a) != degree_sequence(b))
        return false;
    return canonical_form(a) == canonical_form(b);
}

std::vector<std::vector<int>> automorphisms(const Graph& g, std::size_t cap)
{
    std::vector<std::vector<int>> found;
    std::vector<int> image(static_cast<std::size_t>(g.order()));
    automorphism_dfs(g, image, 0, 0, cap, found);
    return found;
}

std::uint64_t automorphism_count(const Graph& g)
{
    return automorphisms(g).size();
}

bool colorings_equivalent(const EdgeColoring& a, const EdgeColoring& b)
{
    if (a.base() != b.base())
        throw std::invalid_argument("colorings of different graphs are never equivalent");
    if (a.red_count() != b.red_count())
        return false;
    for (const auto& phi : automorphisms(a.base()))
        if (apply_permutation(a.red(), phi) == b.red())
            return true;
    return false;
}

std::size_t count_coloring_orbits(const Graph& g, const std::vector<EdgeColoring>& colorings)
{
    if (colorings.empty())
        return 0;
    const auto auts = automorphisms(g);
    std::unordered_set<std::string> signatures;
    for (const EdgeColoring& c : colorings) {
        if (c.base() != g)
            throw std::invalid_argument("coloring does not belong to the given graph");
        std::string min_sig;
        for (const auto& phi : auts) {
            std::string sig = encode_graph6(apply_permutation(c.red(), phi));
            if (min_sig.empty() || sig < min_sig)
                min_sig = std::move(sig);
        }
        signatures.insert(std::move(min_sig));
    }
    return signatures.size();
}

} // namespace cocrit
