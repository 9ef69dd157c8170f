#include "cocrit/atlas.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <unordered_set>

#include "cocrit/cocritical.hpp"
#include "cocrit/errors.hpp"
#include "cocrit/graph6.hpp"
#include "cocrit/iso.hpp"
#include "cocrit/parallel.hpp"

namespace cocrit {

namespace {

    using Clock = std::chrono::steady_clock;

    std::uint64_t binomial(int n, int r)
    {
        if (r < 0 || r > n)
            return 0;
        std::uint64_t out = 1;
        for (int i = 0; i < r; ++i)
            out = out * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
        return out;
    }

    std::uint64_t next_same_popcount(std::uint64_t x)
    {
        const std::uint64_t c = x & (~x + 1);
        const std::uint64_t r = x + c;
        return (((r ^ x) >> 2) / c) | r;
    }

    // Mask holding the rank-th m-subset in increasing numeric order.
    std::uint64_t mask_at_rank(int m, std::uint64_t rank)
    {
        std::uint64_t mask = 0;
        for (int i = m; i >= 1; --i) {
            int p = i - 1;
            while (binomial(p + 1, i) <= rank)
                ++p;
            mask |= std::uint64_t{1} << p;
            rank -= binomial(p, i);
        }
        return mask;
    }

    struct PairTable {
        std::vector<Edge> pairs; // bit -> edge, lexicographic
        std::array<std::array<int, kCanonicalMaxVertices>, kCanonicalMaxVertices> index{};

        explicit PairTable(int n)
        {
            int next = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    index[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = next;
                    pairs.push_back(Edge{u, v});
                    ++next;
                }
        }
    };

    Graph graph_from_mask(int n, std::uint64_t mask, const PairTable& table)
    {
        Graph g(n);
        while (mask) {
            const int bit = std::countr_zero(mask);
            mask &= mask - 1;
            const Edge& e = table.pairs[static_cast<std::size_t>(bit)];
            g.add_edge(e.u, e.v);
        }
        return g;
    }

    std::uint64_t canonical_mask(const Graph& g, const PairTable& table)
    {
        const CanonicalForm cf = canonical_form(g);
        std::uint64_t mask = 0;
        for (int i = 0; i < g.order(); ++i)
            for (int j = i + 1; j < g.order(); ++j)
                if (g.has_edge(cf.perm[static_cast<std::size_t>(i)],
                        cf.perm[static_cast<std::size_t>(j)]))
                    mask |= std::uint64_t{1}
                        << table.index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return mask;
    }

    // All isomorphism classes with exactly m edges whose members pass the
    // (isomorphism-invariant) cheap filter, as sorted canonical masks.
    std::vector<std::uint64_t> classes_at_edge_count(int n, int m, unsigned jobs,
        const PairTable& table, const std::function<bool(const Graph&)>& cheap_filter,
        std::uint64_t& scanned)
    {
        const int nbits = n * (n - 1) / 2;
        const std::uint64_t total = binomial(nbits, m);
        const unsigned workers = resolve_jobs(jobs);
        const std::uint64_t chunk = (total + workers - 1) / workers;

        std::vector<std::unordered_set<std::uint64_t>> local(workers);
        parallel_for(workers, workers, [&](std::size_t w) {
            const std::uint64_t begin = std::min<std::uint64_t>(w * chunk, total);
            const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, total);
            if (begin >= end)
                return;
            std::uint64_t mask = mask_at_rank(m, begin);
            for (std::uint64_t r = begin; r < end; ++r) {
                const Graph g = graph_from_mask(n, mask, table);
                if (!cheap_filter || cheap_filter(g))
                    local[w].insert(canonical_mask(g, table));
                if (r + 1 < end)
                    mask = next_same_popcount(mask);
            }
        });

        scanned += total;
        std::set<std::uint64_t> merged;
        for (const auto& s : local)
            merged.insert(s.begin(), s.end());
        return {merged.begin(), merged.end()};
    }

    SearchSummary run_min_scan(const std::string& mode, int n, std::optional<int> k,
        unsigned jobs, const PairTable& table,
        const std::function<bool(const Graph&)>& cheap_filter,
        const std::function<bool(const Graph&)>& validator)
    {
        const auto t0 = Clock::now();
        SearchSummary summary;
        summary.mode = mode;
        summary.n = n;
        summary.k = k;

        const int nbits = n * (n - 1) / 2;
        for (int m = 0; m <= nbits && !summary.minimum_edges; ++m) {
            const std::vector<std::uint64_t> classes
                = classes_at_edge_count(n, m, jobs, table, cheap_filter,
                    summary.graphs_scanned);
            if (classes.empty())
                continue;
            std::vector<char> passed(classes.size(), 0);
            parallel_for(classes.size(), jobs, [&](std::size_t i) {
                const Graph g = graph_from_mask(n, classes[i], table);
                passed[i] = validator(g) ? 1 : 0;
            });
            summary.classes_tested += classes.size();
            for (std::size_t i = 0; i < classes.size(); ++i) {
                if (!passed[i])
                    continue;
                if (!summary.minimum_edges)
                    summary.minimum_edges = m;
                summary.witnesses.push_back(
                    encode_graph6(graph_from_mask(n, classes[i], table)));
            }
        }
        summary.classes_at_minimum = static_cast<int>(summary.witnesses.size());
        summary.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        return summary;
    }

} // namespace

SearchSummary min_c4_saturated(int n, const AtlasConfig& cfg)
{
    if (n < 5 || n > 8)
        throw capability_error("exhaustive saturation scan supports 5 <= n <= 8");
    const PairTable table(n);
    return run_min_scan("saturated", n, std::nullopt, cfg.jobs, table,
        [](const Graph& g) { return is_c4_saturated(g); },
        [](const Graph& g) { return is_c4_saturated(g); });
}

SearchSummary min_cocritical(int n, int k, const AtlasConfig& cfg)
{
    if (k < 2)
        throw std::invalid_argument("co-criticality scan requires k >= 2");
    if (n < 5 || n > 8)
        throw capability_error("exhaustive co-criticality scan supports 5 <= n <= 8");
    if (n == 8 && !cfg.allow_large)
        throw capability_error(
            "the n = 8 co-criticality exhaustion scans 2^28 subsets; pass the "
            "long-running flag to run it");

    const PairTable table(n);
    auto cheap = [k](const Graph& g) {
        return !g.is_complete() && !precheck_filters(g, k).has_value();
    };
    auto validate = [k, &cfg](const Graph& g) {
        CocriticalConfig first;
        first.jobs = 1; // the scan is already parallel at class granularity
        first.solver.node_budget = cfg.first_pass_node_budget;
        try {
            return is_cocritical(g, k, first).verdict;
        } catch (const indeterminate_error&) {
            CocriticalConfig unlimited;
            unlimited.jobs = 1;
            return is_cocritical(g, k, unlimited).verdict;
        }
    };
    return run_min_scan("cocritical", n, k, cfg.jobs, table, cheap, validate);
}

std::vector<Graph> enumerate_graph_classes(int n, const EnumFilter& filter, unsigned jobs)
{
    if (n < 1 || n > 8)
        throw capability_error("class enumeration supports 1 <= n <= 8");
    const PairTable table(n);
    const int nbits = n * (n - 1) / 2;
    const int lo = std::max(filter.min_edges, 0);
    const int hi = std::min(filter.max_edges, nbits);

    std::vector<Graph> out;
    std::uint64_t scanned = 0;
    auto cheap = [&filter](const Graph& g) { return max_star(g) <= filter.max_degree; };
    for (int m = lo; m <= hi; ++m) {
        for (std::uint64_t mask :
            classes_at_edge_count(n, m, jobs, table, cheap, scanned)) {
            Graph g = graph_from_mask(n, mask, table);
            if (!filter.keep || filter.keep(g))
                out.push_back(std::move(g));
        }
    }
    return out;
}

nlohmann::ordered_json summary_to_json(const SearchSummary& summary)
{
    nlohmann::ordered_json j;
    j["mode"] = summary.mode;
    j["n"] = summary.n;
    if (summary.k)
        j["k"] = *summary.k;
    if (summary.minimum_edges)
        j["minimum_edges"] = *summary.minimum_edges;
    else
        j["minimum_edges"] = nullptr;
    j["classes_at_minimum"] = summary.classes_at_minimum;
    j["witnesses"] = summary.witnesses;
    j["graphs_scanned"] = summary.graphs_scanned;
    j["classes_tested"] = summary.classes_tested;
    j["wall_ms"] = summary.wall_ms;
    return j;
}

} // namespace cocrit
