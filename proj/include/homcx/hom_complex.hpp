#pragma once

#include "homcx/graph.hpp"

#include <cstdint>
#include <vector>

namespace homcx {

// A cell of the coloring complex: a multi-valued map eta from V(G) to
// nonempty subsets of V(H) with eta(x) x eta(y) inside E(H) for every edge
// (x,y) of G. dim = sum_v (|eta(v)| - 1); 0-cells are the homomorphisms.
struct Cell {
    std::vector<Bitset> eta;
    int dim = 0;
};

bool cell_less(const Cell& a, const Cell& b); // by (dim, lex eta)

struct FacePoset {
    Graph g, h;
    std::vector<Cell> cells;                        // sorted by (dim, lex eta)
    std::vector<std::size_t> dim_begin;             // stratum offsets; size = max_dim+2
    std::vector<std::vector<std::uint32_t>> faces;  // covering relations: codim-1 faces per cell
    bool complete = false;                          // true iff no cell was cut off by max_dim

    int max_dim() const { return static_cast<int>(dim_begin.size()) - 2; }
    std::vector<std::uint64_t> cell_counts() const;
};

struct ComplexOptions {
    std::uint64_t max_cells = 2'000'000;
    int max_dim = -1; // -1 = unlimited
    int threads = 1;
};

// Backtracking over vertices of g assigning nonempty candidate subsets; a
// subset is admissible iff every member is H-adjacent to every member of each
// assigned neighbor's subset. Throws CapExceeded past max_cells.
FacePoset enumerate_cells(const Graph& g, const Graph& h, const ComplexOptions& opt = {});

// Alternating sum of cell counts. Requires a complete poset.
long long euler_characteristic(const FacePoset& fp);

// The order complex (barycentric subdivision): one d-simplex per chain of d+1
// poset elements, stored as ascending cell-index lists sorted lexicographically
// per dimension. boundary[d] holds one GF(2) column per d-simplex over the
// (d-1)-simplices; boundary[0] is empty.
struct ChainComplex {
    std::vector<std::vector<std::vector<std::uint32_t>>> simplices;
    std::vector<std::vector<Bitset>> boundary;
};

ChainComplex order_complex(const FacePoset& fp, std::uint64_t max_chains = 2'000'000);

struct HomologyReport {
    std::vector<std::uint64_t> cell_counts;    // per dimension
    long long euler = 0;
    std::vector<std::uint64_t> simplex_counts; // order-complex faces per dimension
    std::vector<long long> betti_gf2;
};

// GF(2) Betti numbers of the order complex: betti_d = dim ker d_d - rank d_{d+1}
// via Gaussian elimination. Requires a complete poset. These are homological
// evidence only; they can refute low connectivity but never certify it.
HomologyReport betti_gf2(const FacePoset& fp, std::uint64_t max_chains = 2'000'000);

// Column-wise elimination rank; consumes the columns.
int gf2_rank(std::vector<Bitset> columns);

} // namespace homcx
