#pragma once

#include "homcx/bitset.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homcx {

// Simple undirected graph on vertices 0..n-1. The sorted (min,max) edge list
// and the per-vertex adjacency bitsets are kept in lockstep; the graph is
// treated as immutable once built.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // (min,max), ascending, no duplicates
    std::vector<Bitset> adj;

    Graph() = default;
    explicit Graph(int n_);

    // Rejects loops and out-of-range endpoints; adding an existing edge is a no-op.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const
    {
        return u >= 0 && u < n && v >= 0 && v < n && u != v && adj[u].test(v);
    }
    int degree(int v) const { return adj[v].count(); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    Graph without_edge(int u, int v) const;
    // Induced subgraph on vertices 0..m-1.
    Graph induced_prefix(int m) const;

    friend bool operator==(const Graph&, const Graph&) = default;
};

// DIMACS-like text: optional "c ..." comments, one "p edge <n> <m>" header,
// then m lines "e <u> <v>" with 1-based endpoints. Duplicate edge lines
// collapse to one edge; m counts edge lines. Throws ParseError.
Graph parse_graph(std::string_view text);

// Emits the header and the edge lines sorted by (min,max), 1-based.
std::string serialize_graph(const Graph& g);

Graph complete_graph(int n); // n >= 1
Graph cycle_graph(int n);    // n >= 3
Graph path_graph(int n);     // n >= 1

// Vertices are the k-subsets of {0..n-1} in lexicographic order; edges join
// disjoint subsets. Requires n > k >= 1.
Graph kneser_graph(int n, int k);

// The fixed 9-vertex, 22-edge graph laid out as a 3x3 grid:
// vertices 0..3 are the corners (clockwise from top-left), 4..7 the edge
// midpoints (top, right, bottom, left), 8 the center. Corners form a clique;
// each corner sees its two incident midpoints; midpoints form a 4-cycle; the
// center sees all four midpoints.
Graph counterexample_g9();

// Dispatch by family name: complete:n, cycle:n, path:n, kneser:n,k,
// counterexample_g9. Throws std::invalid_argument on bad names/params.
Graph generate_graph(const std::string& family, const std::vector<int>& params);

} // namespace homcx
