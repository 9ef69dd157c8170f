#include "cocrit/graph6.hpp"

#include <sstream>

#include "cocrit/coloring.hpp"
#include "cocrit/errors.hpp"

namespace cocrit {

namespace {

    constexpr int kBias = 63;

    void append_bits(std::string& out, const std::vector<bool>& bits)
    {
        int acc = 0;
        int filled = 0;
        for (bool b : bits) {
            acc = (acc << 1) | (b ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
        if (filled > 0) {
            acc <<= (6 - filled);
            out.push_back(static_cast<char>(acc + kBias));
        }
    }

} // namespace

std::string encode_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            bits.push_back(g.has_edge(u, v));
    append_bits(out, bits);
    return out;
}

Graph decode_graph6(std::string_view s)
{
    if (s.empty())
        throw parse_error("empty graph6 string", 0);

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size())
            throw parse_error("truncated graph6 string", pos);
        const unsigned char c = static_cast<unsigned char>(s[pos]);
        if (c < 63 || c > 126)
            throw parse_error("byte outside graph6 range", pos);
        ++pos;
        return c - kBias;
    };

    int n;
    if (s[0] == '~') {
        ++pos;
        const int a = next();
        const int b = next();
        const int c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = next();
    }
    if (n < 1)
        throw parse_error("graph6 vertex count must be positive", 0);
    if (n > kMaxVertices)
        throw capability_error("graph6 vertex count " + std::to_string(n)
            + " exceeds capacity " + std::to_string(kMaxVertices));

    Graph g(n);
    int acc = 0;
    int avail = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (avail == 0) {
                acc = next();
                avail = 6;
            }
            if (acc & (1 << (avail - 1)))
                g.add_edge(u, v);
            --avail;
        }
    }
    if (avail > 0 && (acc & ((1 << avail) - 1)) != 0)
        throw parse_error("nonzero padding bits", pos - 1);
    if (pos != s.size())
        throw parse_error("trailing bytes after graph6 data", pos);
    return g;
}

Graph parse_edge_list(std::string_view text)
{
    struct Pair {
        int u, v;
        std::size_t offset;
    };
    std::vector<Pair> pairs;
    int declared_n = -1;
    int max_vertex = -1;

    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        const std::size_t eol = text.find('\n', line_start);
        std::string_view line = text.substr(line_start,
            eol == std::string_view::npos ? std::string_view::npos : eol - line_start);
        const std::size_t offset = line_start;
        line_start = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string_view::npos || line[b] == '#')
            continue;
        std::istringstream ss{std::string(line)};
        long long a = -1, c = -1;
        if (!(ss >> a))
            throw parse_error("expected integer in edge list", offset);
        if (!(ss >> c)) {
            if (declared_n >= 0 || !pairs.empty())
                throw parse_error("vertex count line must come first", offset);
            if (a < 1 || a > kMaxVertices)
                throw parse_error("vertex count outside supported range", offset);
            declared_n = static_cast<int>(a);
            continue;
        }
        std::string rest;
        if (ss >> rest)
            throw parse_error("trailing tokens on edge list line", offset);
        if (a < 0 || c < 0 || a >= kMaxVertices || c >= kMaxVertices || a == c)
            throw parse_error("invalid edge endpoints", offset);
        pairs.push_back({static_cast<int>(a), static_cast<int>(c), offset});
        max_vertex = std::max(max_vertex, static_cast<int>(std::max(a, c)));
    }

    const int n = declared_n >= 0 ? declared_n : max_vertex + 1;
    if (n < 1)
        throw parse_error("edge list describes no vertices", 0);
    Graph g(n);
    for (const Pair& p : pairs) {
        if (p.u >= n || p.v >= n)
            throw parse_error("edge endpoint exceeds declared vertex count", p.offset);
        g.add_edge(p.u, p.v);
    }
    return g;
}

std::string to_dot(const Graph& g, const EdgeColoring* coloring, const VertexRoleMap* roles)
{
    std::ostringstream out;
    out << "graph G {\n";
    if (roles) {
        std::vector<std::string> label(static_cast<std::size_t>(g.order()));
        for (const auto& [name, verts] : *roles)
            for (std::size_t i = 0; i < verts.size(); ++i)
                label[static_cast<std::size_t>(verts[i])]
                    = verts.size() == 1 ? name : name + std::to_string(i + 1);
        for (int v = 0; v < g.order(); ++v)
            if (!label[static_cast<std::size_t>(v)].empty())
                out << "  " << v << " [label=\"" << label[static_cast<std::size_t>(v)]
                    << "\"];\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (coloring)
            out << " [color=\""
                << (coloring->color_of(e.u, e.v) == Color::Red ? "red" : "blue") << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace cocrit
