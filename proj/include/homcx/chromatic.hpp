#pragma once

#include "homcx/graph.hpp"

#include <span>
#include <vector>

namespace homcx {

struct ChromaticResult {
    int chi = 0;
    std::vector<int> witness;            // proper coloring using exactly chi colors
    std::vector<int> lower_bound_clique; // pairwise adjacent, so |clique| <= chi
};

// True iff every edge of g has differently colored endpoints. Colors must lie
// in 0..k-1 and the coloring must have length g.n (std::invalid_argument).
bool is_proper(const Graph& g, std::span<const int> coloring, int k);

// Exact chromatic number: greedy max-clique lower bound, DSATUR upper bound,
// then per-k backtracking colorability closing the gap. Exactness is only
// supported up to 64 vertices; larger graphs throw CapExceeded.
ChromaticResult chromatic_number(const Graph& g);

} // namespace homcx
