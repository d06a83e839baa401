#include "homcx/graph.hpp"

#include "homcx/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace homcx {

namespace {

    // Practical ceiling for generated graphs; adjacency bitsets are O(n^2) bits.
    constexpr int kMaxGeneratedVertices = 4096;

} // namespace

Graph::Graph(int n_)
    : n(n_)
    , adj(n_, Bitset(n_))
{
    if (n_ < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
}

void Graph::add_edge(int u, int v)
{
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("loop edges are not allowed");
    if (adj[u].test(v))
        return;
    adj[u].set(v);
    adj[v].set(u);
    auto e = std::minmax(u, v);
    std::pair<int, int> p{e.first, e.second};
    edges.insert(std::lower_bound(edges.begin(), edges.end(), p), p);
}

Graph Graph::without_edge(int u, int v) const
{
    Graph out(n);
    for (auto [a, b] : edges)
        if (!((a == std::min(u, v)) && (b == std::max(u, v))))
            out.add_edge(a, b);
    return out;
}

Graph Graph::induced_prefix(int m) const
{
    if (m < 0 || m > n)
        throw std::invalid_argument("induced prefix size out of range");
    Graph out(m);
    for (auto [a, b] : edges)
        if (a < m && b < m)
            out.add_edge(a, b);
    return out;
}

Graph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0;
    long long declared_m = 0, edge_lines = 0;
    Graph g;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok))
            continue; // blank line
        if (tok == "c")
            continue;
        if (tok == "p") {
            if (have_header)
                throw ParseError(line_no, "duplicate header");
            std::string fmt;
            long long nn, mm;
            if (!(ls >> fmt >> nn >> mm) || fmt != "edge" || nn < 0 || mm < 0)
                throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
            std::string rest;
            if (ls >> rest)
                throw ParseError(line_no, "trailing tokens after header");
            have_header = true;
            n = static_cast<int>(nn);
            declared_m = mm;
            g = Graph(n);
            continue;
        }
        if (tok == "e") {
            if (!have_header)
                throw ParseError(line_no, "edge line before header");
            long long u, v;
            if (!(ls >> u >> v))
                throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
            std::string rest;
            if (ls >> rest)
                throw ParseError(line_no, "trailing tokens after edge");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(n));
            if (u == v)
                throw ParseError(line_no, "loop edge " + std::to_string(u) + " " + std::to_string(v));
            ++edge_lines;
            if (edge_lines > declared_m)
                throw ParseError(line_no, "more edge lines than declared ("
                        + std::to_string(declared_m) + ")");
            g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw ParseError(line_no, "unrecognized line type '" + tok + "'");
    }
    if (!have_header)
        throw ParseError(line_no, "missing 'p edge' header");
    if (edge_lines != declared_m)
        throw ParseError(line_no, "declared " + std::to_string(declared_m) + " edges but found "
                + std::to_string(edge_lines) + " edge lines");
    return g;
}

std::string serialize_graph(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.n << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges)
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph complete_graph(int n)
{
    if (n < 1)
        throw std::invalid_argument("complete graph needs n >= 1");
    if (n > kMaxGeneratedVertices)
        throw CapExceeded("complete graph too large");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle graph needs n >= 3");
    if (n > kMaxGeneratedVertices)
        throw CapExceeded("cycle graph too large");
    Graph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n)
{
    if (n < 1)
        throw std::invalid_argument("path graph needs n >= 1");
    if (n > kMaxGeneratedVertices)
        throw CapExceeded("path graph too large");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph kneser_graph(int n, int k)
{
    if (k < 1 || n <= k)
        throw std::invalid_argument("kneser graph needs n > k >= 1");
    // C(n,k) with overflow guard against the vertex ceiling.
    std::uint64_t vertices = 1;
    for (int i = 0; i < k; ++i) {
        vertices = vertices * static_cast<std::uint64_t>(n - i) / (i + 1);
        if (vertices > kMaxGeneratedVertices)
            throw CapExceeded("kneser graph too large");
    }

    // k-subsets in lexicographic order.
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i)
        cur[i] = i;
    while (true) {
        subsets.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }

    Graph g(static_cast<int>(subsets.size()));
    std::vector<Bitset> masks;
    masks.reserve(subsets.size());
    for (const auto& s : subsets) {
        Bitset m(n);
        for (int x : s)
            m.set(x);
        masks.push_back(std::move(m));
    }
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!masks[u].intersects(masks[v]))
                g.add_edge(u, v);
    return g;
}

Graph counterexample_g9()
{
    // 0..3 corners clockwise from top-left, 4..7 midpoints (t,r,b,l), 8 center.
    static constexpr std::pair<int, int> kEdges[22] = {
        {0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3},                 // corner clique
        {0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {0, 7}, // corner-midpoint
        {4, 5}, {5, 6}, {6, 7}, {4, 7},                                 // midpoint cycle
        {4, 8}, {5, 8}, {6, 8}, {7, 8},                                 // center spokes
    };
    Graph g(9);
    for (auto [u, v] : kEdges)
        g.add_edge(u, v);
    return g;
}

Graph generate_graph(const std::string& family, const std::vector<int>& params)
{
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family '" + family + "' takes "
                    + std::to_string(k) + " parameter(s)");
    };
    if (family == "complete") {
        want(1);
        return complete_graph(params[0]);
    }
    if (family == "cycle") {
        want(1);
        return cycle_graph(params[0]);
    }
    if (family == "path") {
        want(1);
        return path_graph(params[0]);
    }
    if (family == "kneser") {
        want(2);
        return kneser_graph(params[0], params[1]);
    }
    if (family == "counterexample_g9") {
        want(0);
        return counterexample_g9();
    }
    throw std::invalid_argument("unknown graph family '" + family + "'");
}

} // namespace homcx
