#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cocrit/atlas.hpp"
#include "cocrit/cocritical.hpp"
#include "cocrit/constructions.hpp"
#include "cocrit/errors.hpp"
#include "cocrit/graph6.hpp"
#include "cocrit/iso.hpp"
#include "cocrit/solver.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::ordered_json;

struct GlobalOptions {
    std::string format = "json";
    unsigned jobs = 0;
    std::uint64_t seed = 0;
    std::uint64_t budget_nodes = 0;
    double budget_secs = 0.0;
    bool force = false;
};

std::string timestamp_utc()
{
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

ordered_json make_manifest(const std::string& command, const GlobalOptions& opts,
    ordered_json parameters)
{
    ordered_json manifest;
    manifest["tool"] = "cocrit";
    manifest["version"] = kVersion;
    manifest["command"] = command;
    manifest["parameters"] = std::move(parameters);
    manifest["budgets"] = {
        {"nodes", opts.budget_nodes},
        {"secs", opts.budget_secs},
    };
    manifest["seed"] = opts.seed;
    manifest["jobs"] = opts.jobs;
    manifest["timestamp"] = timestamp_utc();
    return manifest;
}

void render_table(const ordered_json& j, std::ostream& out, const std::string& prefix = "")
{
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            render_table(value, out, prefix + key + ".");
        } else if (value.is_array() && value.size() > 8) {
            out << prefix + key << ": [" << value.size() << " entries]\n";
        } else {
            out << prefix + key << ": " << value.dump() << "\n";
        }
    }
}

void emit(const ordered_json& j, const GlobalOptions& opts, const std::string& out_path)
{
    std::ostringstream rendered;
    if (opts.format == "table")
        render_table(j, rendered);
    else
        rendered << j.dump(2) << "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << rendered.str();
    } else {
        std::ofstream f(out_path);
        if (!f)
            throw std::runtime_error("cannot write " + out_path);
        f << rendered.str();
        std::cout << "report written to " << out_path << "\n";
    }
}

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// graph6 input uses one graph per line and the first non-comment line is
// taken; any line containing a space marks the file as an edge list.
cocrit::Graph load_graph(const std::string& path)
{
    const std::string text = read_input(path);
    std::istringstream ss(text);
    std::string line;
    std::string first;
    while (std::getline(ss, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        if (line.find(' ') != std::string::npos)
            return cocrit::parse_edge_list(text);
        if (first.empty())
            first = line;
    }
    if (first.empty())
        throw cocrit::parse_error("input contains no graph", 0);
    return cocrit::decode_graph6(first);
}

cocrit::SolverConfig solver_config(const GlobalOptions& opts)
{
    cocrit::SolverConfig cfg;
    cfg.node_budget = opts.budget_nodes;
    cfg.time_budget_secs = opts.budget_secs;
    return cfg;
}

int cmd_construct(const std::string& family, int k, int n, const std::string& out_prefix,
    bool want_dot, const GlobalOptions& opts)
{
    cocrit::ConstructionBlueprint bp;
    if (family == "c4-star") {
        bp = cocrit::build_g(k, n);
    } else if (family == "c4-star-k2") {
        if (k != 2)
            throw std::domain_error("family c4-star-k2 is defined for k = 2");
        bp = cocrit::build_g_k2(n);
    } else {
        throw std::domain_error("unknown family " + family);
    }

    cocrit::CertificateColoring cert = family == "c4-star"
        ? cocrit::certificate_coloring(bp, solver_config(opts))
        : cocrit::certificate_coloring_k2(bp);

    const std::string prefix = out_prefix.empty()
        ? family + "-k" + std::to_string(bp.k) + "-n" + std::to_string(n)
        : out_prefix;

    {
        std::ofstream f(prefix + ".g6");
        f << cocrit::encode_graph6(bp.graph) << "\n";
    }
    {
        std::ofstream f(prefix + ".roles.json");
        f << cocrit::blueprint_to_json(bp).dump(2) << "\n";
    }
    {
        ordered_json cj = cocrit::coloring_to_json(cert.coloring, bp.k);
        cj["provenance"] = cert.provenance == cocrit::CertificateColoring::Provenance::ClosedForm
            ? "closed-form-sigma"
            : "solver-found";
        std::ofstream f(prefix + ".coloring.json");
        f << cj.dump(2) << "\n";
    }
    if (want_dot) {
        std::ofstream f(prefix + ".dot");
        f << cocrit::to_dot(bp.graph, &cert.coloring, &bp.roles);
    }

    ordered_json j;
    j["manifest"] = make_manifest("construct", opts,
        {{"family", family}, {"k", bp.k}, {"n", n}, {"out", prefix}});
    j["family"] = family;
    j["k"] = bp.k;
    j["n"] = n;
    j["e"] = bp.graph.edge_count();
    j["predicted_e"] = family == "c4-star" ? cocrit::predicted_edge_count(bp.k, n)
                                           : static_cast<long long>(2 * n - 3);
    j["graph6"] = cocrit::encode_graph6(bp.graph);
    j["certificate_provenance"]
        = cert.provenance == cocrit::CertificateColoring::Provenance::ClosedForm
        ? "closed-form-sigma"
        : "solver-found";
    j["files"] = {prefix + ".g6", prefix + ".roles.json", prefix + ".coloring.json"};
    emit(j, opts, "");
    return 0;
}

int cmd_verify(const std::string& input, int k, const std::string& out_path,
    const GlobalOptions& opts)
{
    const cocrit::Graph g = load_graph(input);
    cocrit::CocriticalConfig cfg;
    cfg.solver = solver_config(opts);
    cfg.jobs = opts.jobs;
    const cocrit::CocriticalReport report = cocrit::is_cocritical(g, k, cfg);

    ordered_json j = cocrit::report_to_json(report, g);
    j["manifest"] = make_manifest("verify", opts, {{"input", input}, {"k", k}});
    emit(j, opts, out_path);
    return report.verdict ? 0 : 1;
}

int cmd_enumerate(const std::string& mode, int n, int k, const std::string& input,
    std::size_t limit, const std::string& out_path, const GlobalOptions& opts)
{
    if (mode == "saturated" || mode == "cocritical") {
        cocrit::AtlasConfig cfg;
        cfg.jobs = opts.jobs;
        cfg.allow_large = opts.force;
        const cocrit::SearchSummary summary = mode == "saturated"
            ? cocrit::min_c4_saturated(n, cfg)
            : cocrit::min_cocritical(n, k, cfg);
        ordered_json j = cocrit::summary_to_json(summary);
        j["manifest"] = make_manifest("enumerate", opts, {{"mode", mode}, {"n", n}, {"k", k}});
        emit(j, opts, "");
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            for (const std::string& w : summary.witnesses)
                f << w << "\n";
            std::cout << "witnesses written to " << out_path << "\n";
        }
        return 0;
    }
    if (mode == "colorings") {
        const cocrit::Graph g = load_graph(input);
        cocrit::SolverConfig cfg = solver_config(opts);
        cfg.enumeration_limit = limit;
        const cocrit::EnumerationOutcome out = cocrit::enumerate_critical_colorings(g, k, cfg);

        ordered_json j;
        j["manifest"] = make_manifest("enumerate", opts,
            {{"mode", mode}, {"input", input}, {"k", k}, {"limit", limit}});
        j["graph6"] = cocrit::encode_graph6(g);
        j["k"] = k;
        j["raw_count"] = out.colorings.size();
        j["truncated"] = out.truncated;
        try {
            j["reduced_count"] = cocrit::count_coloring_orbits(g, out.colorings);
        } catch (const cocrit::capability_error& e) {
            j["reduced_count"] = nullptr;
            j["reduced_count_note"] = e.what();
        }
        j["stats"] = {{"nodes", out.stats.nodes}, {"propagations", out.stats.propagations},
            {"time_ms", out.stats.wall_ms}};
        emit(j, opts, "");
        if (!out_path.empty()) {
            auto arr = ordered_json::array();
            for (const auto& c : out.colorings)
                arr.push_back(cocrit::coloring_to_json(c, k));
            std::ofstream f(out_path);
            f << arr.dump(2) << "\n";
            std::cout << "colorings written to " << out_path << "\n";
        }
        return 0;
    }
    throw std::domain_error("unknown mode " + mode);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Construction, verification and exhaustive search for "
                 "(C4, K_{1,k})-co-critical graphs"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOptions opts;
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--jobs", opts.jobs, "Worker threads (0 = all cores)");
    app.add_option("--seed", opts.seed, "Seed recorded in the run manifest");
    app.add_option("--budget-nodes", opts.budget_nodes, "Search node budget (0 = unlimited)");
    app.add_option("--budget-secs", opts.budget_secs, "Wall-clock budget per search");
    app.add_flag("--force", opts.force, "Allow scans past the default cost gate");

    auto* construct = app.add_subcommand("construct", "Build a family member");
    std::string family = "c4-star";
    int c_k = 2;
    int c_n = 0;
    std::string c_out;
    bool c_dot = false;
    construct->add_option("--family", family, "c4-star or c4-star-k2")->required();
    construct->add_option("--k", c_k, "Star size parameter");
    construct->add_option("--n", c_n, "Vertex count")->required();
    construct->add_option("--out", c_out, "Output file prefix");
    construct->add_flag("--dot", c_dot, "Also write a DOT export");

    auto* verify = app.add_subcommand("verify", "Decide co-criticality of a graph");
    std::string v_input;
    int v_k = 2;
    std::string v_out;
    verify->add_option("--input", v_input, "graph6 or edge-list file, - for stdin")->required();
    verify->add_option("--k", v_k, "Star size parameter")->required();
    verify->add_option("--out", v_out, "Write the report JSON here");

    auto* enumerate = app.add_subcommand("enumerate", "Exhaustive scans and coloring counts");
    std::string e_mode;
    int e_n = 0;
    int e_k = 2;
    std::string e_input;
    std::size_t e_limit = 0;
    std::string e_out;
    enumerate->add_option("--mode", e_mode, "saturated, cocritical or colorings")->required();
    enumerate->add_option("--n", e_n, "Vertex count for scans");
    enumerate->add_option("--k", e_k, "Star size parameter");
    enumerate->add_option("--input", e_input, "Graph for colorings mode");
    enumerate->add_option("--limit", e_limit, "Stop after this many colorings (0 = all)");
    enumerate->add_option("--out", e_out, "Witness / coloring output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed())
            return cmd_construct(family, c_k, c_n, c_out, c_dot, opts);
        if (verify->parsed()) {
            // verify runs under a 10 minute wall budget unless overridden
            if (app.count("--budget-secs") == 0)
                opts.budget_secs = 600.0;
            return cmd_verify(v_input, v_k, v_out, opts);
        }
        if (enumerate->parsed())
            return cmd_enumerate(e_mode, e_n, e_k, e_input, e_limit, e_out, opts);
    } catch (const cocrit::indeterminate_error& e) {
        std::cerr << "indeterminate: " << e.what() << "\n";
        return 3;
    } catch (const cocrit::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const cocrit::capability_error& e) {
        std::cerr << "capability error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
