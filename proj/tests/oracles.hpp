#pragma once

// Brute-force oracles used only by tests. These deliberately avoid the
// library's search/bucket/boundary machinery: plain odometer enumeration,
// pairwise scans, subset filters, and a dense boolean Gauss elimination.

#include "homcx/graph.hpp"
#include "homcx/hom_enum.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

// All maps V(g) -> V(h) passing the edge condition, in lexicographic order.
std::vector<std::vector<int>> brute_homs(const homcx::Graph& g, const homcx::Graph& h);

// Smallest k such that a proper k-coloring exists (odometer over k^n maps).
int brute_chromatic(const homcx::Graph& g);

bool brute_k_colorable(const homcx::Graph& g, int k);

// All index pairs (i<j) of colorings at Hamming distance exactly 1.
std::vector<std::pair<std::size_t, std::size_t>> brute_flip_edges(
    const std::vector<std::vector<int>>& colorings);

// All multi-valued maps eta with nonempty values and eta(x) x eta(y) inside
// E(h) on edges, each value encoded as a bitmask over V(h) (h.n <= 20).
// Returned as per-vertex mask vectors, unordered.
std::vector<std::vector<std::uint32_t>> brute_cells(const homcx::Graph& g, const homcx::Graph& h);

// GF(2) Betti numbers of the order complex of the cells under componentwise
// mask containment: chains found by subset filtering, ranks by dense
// row-reduction over bool matrices.
std::vector<long long> brute_poset_betti(const std::vector<std::vector<std::uint32_t>>& cells);

} // namespace oracle
