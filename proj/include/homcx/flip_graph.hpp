#pragma once

#include "homcx/hom_enum.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homcx {

// The 1-skeleton over a HomSet: colorings adjacent iff they differ at exactly
// one vertex. Note that two valid colorings at Hamming distance 1 always
// satisfy the multi-valued cell condition at the differing vertex (each of the
// two colors is individually compatible with all neighbors), so no extra
// compatibility check is needed here.
struct FlipGraph {
    HomSet homset;
    std::vector<std::vector<std::uint32_t>> adjacency; // sorted neighbor indices
    std::vector<std::uint32_t> parent;                 // union-find forest over coloring indices
    std::uint64_t edge_count = 0;

    std::uint32_t component_root(std::uint32_t i) const;
};

struct ComponentReport {
    int component_count = 0;
    std::vector<int> sizes;                       // descending
    std::vector<std::size_t> representatives;     // lowest coloring index per component
};

// Buckets colorings by (assignment with one position wildcarded); all pairs in
// a bucket are edges. O(N*n) keys rather than an O(N^2) scan.
FlipGraph build_flip_graph(HomSet homset, int threads = 1);

ComponentReport components(const FlipGraph& fg);

// Throws std::invalid_argument if either coloring is not in the homset.
bool is_edge(const FlipGraph& fg, std::span<const int> a, std::span<const int> b);

// Minimum-length flip sequence from one coloring to another, or nullopt when
// they lie in different components. BFS ties break toward the lowest coloring
// index. from == to yields a single-element path.
std::optional<std::vector<Coloring>> shortest_path(const FlipGraph& fg,
    std::span<const int> from, std::span<const int> to);

// One node per coloring (label = its text form), one undirected edge per flip.
std::string to_dot(const FlipGraph& fg);

} // namespace homcx
