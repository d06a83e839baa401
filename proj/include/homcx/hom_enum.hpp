#pragma once

#include "homcx/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace homcx {

// A homomorphism G -> H as a dense vertex-indexed color array.
using Coloring = std::vector<int>;

// Pure predicate: correct length, colors in range, and every edge of g mapped
// to an edge of h.
bool is_homomorphism(const Graph& g, const Graph& h, std::span<const int> assignment);

// All homomorphisms G -> H, distinct and lexicographically sorted.
struct HomSet {
    Graph g, h;
    std::vector<Coloring> colorings;

    // Position of an assignment (binary search), or -1 if absent.
    std::ptrdiff_t index_of(std::span<const int> assignment) const;
    std::size_t size() const { return colorings.size(); }
};

struct HomEnumOptions {
    std::uint64_t max_colorings = 10'000'000; // result-size guard
    int threads = 1;
};

// Backtracking over vertices of g in descending-degree order (ties by index);
// candidate colors are the bitset intersection of H-neighborhoods of the
// already-assigned G-neighbors. Output is sorted on completion, so it does not
// depend on the search order or the thread count. Throws CapExceeded when the
// result-size guard trips.
HomSet enumerate_homs(const Graph& g, const Graph& h, const HomEnumOptions& opt = {});

// |enumerate_homs(g,h)| without materializing the list.
std::uint64_t count_homs(const Graph& g, const Graph& h, int threads = 1);

// The vertex order used by the backtracking searches: descending degree in g,
// ties by index.
std::vector<int> elimination_order(const Graph& g);

// Text form: space-separated 1-based colors.
std::string coloring_to_text(const Coloring& c);
Coloring coloring_from_text(std::string_view text, int color_count);

} // namespace homcx
