#include "homcx/hom_complex.hpp"

#include "homcx/errors.hpp"
#include "homcx/hom_enum.hpp"
#include "homcx/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <stdexcept>

namespace homcx {

bool cell_less(const Cell& a, const Cell& b)
{
    if (a.dim != b.dim)
        return a.dim < b.dim;
    for (std::size_t v = 0; v < a.eta.size(); ++v) {
        if (a.eta[v] != b.eta[v])
            return lex_less(a.eta[v], b.eta[v]);
    }
    return false;
}

std::vector<std::uint64_t> FacePoset::cell_counts() const
{
    std::vector<std::uint64_t> counts;
    for (std::size_t d = 0; d + 1 < dim_begin.size(); ++d)
        counts.push_back(dim_begin[d + 1] - dim_begin[d]);
    return counts;
}

namespace {

    struct CellSearch {
        const Graph& g;
        const Graph& h;
        const ComplexOptions& opt;
        std::vector<int> order;
        std::vector<int> pos;
        std::atomic<std::uint64_t>& produced;
        std::atomic<bool>& over_cap;

        // chosen[i]: subset at order position i; common[i]: common H-neighbors
        // of every color in chosen[i] (what neighbors of that vertex may use).
        struct Level {
            Bitset chosen;
            Bitset common;
        };

        bool emit(std::vector<Level>& levels, std::vector<Cell>& out)
        {
            if (produced.fetch_add(1) + 1 > opt.max_cells) {
                over_cap.store(true);
                return false;
            }
            Cell cell;
            cell.eta.assign(g.n, Bitset(h.n));
            cell.dim = 0;
            for (int i = 0; i < g.n; ++i) {
                cell.eta[order[i]] = levels[i].chosen;
                cell.dim += levels[i].chosen.count() - 1;
            }
            out.push_back(std::move(cell));
            return true;
        }

        // Enumerate admissible nonempty subsets of `universe` for the vertex at
        // `depth`, then recurse to the next vertex. `budget` is the remaining
        // dimension allowance (-1 = unlimited); min_first, when >= 0, pins the
        // smallest chosen element (used to partition the root level into tasks).
        bool subsets(int depth, const std::vector<int>& universe, std::size_t idx,
            int budget, int min_first, std::vector<Level>& levels, std::vector<Cell>& out)
        {
            if (levels[depth].chosen.any()) {
                if (!descend(depth + 1, budget, levels, out))
                    return false;
            }
            for (std::size_t i = idx; i < universe.size(); ++i) {
                int c = universe[i];
                bool empty_so_far = !levels[depth].chosen.any();
                if (min_first >= 0 && empty_so_far && c != min_first)
                    continue;
                if (!empty_so_far && budget == 0)
                    break; // adding any further color exceeds max_dim
                Bitset saved_common = levels[depth].common;
                levels[depth].chosen.set(c);
                levels[depth].common &= h.adj[c];
                int next_budget = budget < 0 ? -1 : (empty_so_far ? budget : budget - 1);
                if (!subsets(depth, universe, i + 1, next_budget, min_first, levels, out))
                    return false;
                levels[depth].chosen.reset(c);
                levels[depth].common = saved_common;
            }
            return true;
        }

        bool descend(int depth, int budget, std::vector<Level>& levels, std::vector<Cell>& out)
        {
            if (depth == g.n)
                return emit(levels, out);
            int v = order[depth];
            Bitset universe = Bitset::full(h.n);
            for (int u = g.adj[v].first(); u >= 0; u = g.adj[v].next(u))
                if (pos[u] < depth)
                    universe &= levels[pos[u]].common;
            levels[depth].chosen = Bitset(h.n);
            levels[depth].common = Bitset::full(h.n);
            return subsets(depth, universe.elements(), 0, budget, -1, levels, out);
        }
    };

} // namespace

FacePoset enumerate_cells(const Graph& g, const Graph& h, const ComplexOptions& opt)
{
    if (g.n < 1 || h.n < 1)
        throw std::invalid_argument("enumerate_cells needs nonempty graphs");

    FacePoset fp;
    fp.g = g;
    fp.h = h;

    std::vector<int> order = elimination_order(g);
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i)
        pos[order[i]] = i;

    std::atomic<std::uint64_t> produced{0};
    std::atomic<bool> over_cap{false};
    std::vector<std::vector<Cell>> per_task(h.n);

    // Root-level tasks: partition by the smallest color in the first vertex's
    // subset. One code path regardless of thread count.
    detail::run_tasks(h.n, opt.threads, [&](int min_first) {
        CellSearch s{g, h, opt, order, pos, produced, over_cap};
        std::vector<CellSearch::Level> levels(g.n);
        levels[0].chosen = Bitset(h.n);
        levels[0].common = Bitset::full(h.n);
        std::vector<int> universe(h.n);
        for (int c = 0; c < h.n; ++c)
            universe[c] = c;
        s.subsets(0, universe, 0, opt.max_dim, min_first, levels, per_task[min_first]);
    });
    if (over_cap.load())
        throw CapExceeded("cell count exceeds the configured cap ("
                + std::to_string(opt.max_cells) + ")");

    std::size_t total = 0;
    for (const auto& part : per_task)
        total += part.size();
    fp.cells.reserve(total);
    for (auto& part : per_task)
        for (auto& c : part)
            fp.cells.push_back(std::move(c));
    std::sort(fp.cells.begin(), fp.cells.end(), cell_less);

    int max_dim_seen = fp.cells.empty() ? -1 : fp.cells.back().dim;
    fp.dim_begin.assign(max_dim_seen + 2, 0);
    for (const auto& c : fp.cells)
        ++fp.dim_begin[c.dim + 1];
    for (std::size_t d = 1; d < fp.dim_begin.size(); ++d)
        fp.dim_begin[d] += fp.dim_begin[d - 1];

    // A cell of dimension k forces faces of every dimension below it, so the
    // enumeration is complete unless some cell reached the max_dim ceiling.
    fp.complete = opt.max_dim < 0 || max_dim_seen < opt.max_dim;

    // Covering relations: remove one color from one vertex; the result is
    // always a valid cell one stratum down, found by binary search.
    fp.faces.assign(fp.cells.size(), {});
    for (std::size_t i = 0; i < fp.cells.size(); ++i) {
        const Cell& cell = fp.cells[i];
        if (cell.dim == 0)
            continue;
        auto lo = fp.cells.begin() + fp.dim_begin[cell.dim - 1];
        auto hi = fp.cells.begin() + fp.dim_begin[cell.dim];
        Cell face = cell;
        face.dim = cell.dim - 1;
        for (int v = 0; v < g.n; ++v) {
            if (cell.eta[v].count() < 2)
                continue;
            for (int c = cell.eta[v].first(); c >= 0; c = cell.eta[v].next(c)) {
                face.eta[v].reset(c);
                auto it = std::lower_bound(lo, hi, face, cell_less);
                assert(it != hi && !cell_less(face, *it));
                fp.faces[i].push_back(static_cast<std::uint32_t>(it - fp.cells.begin()));
                face.eta[v].set(c);
            }
        }
        std::sort(fp.faces[i].begin(), fp.faces[i].end());
    }
    return fp;
}

long long euler_characteristic(const FacePoset& fp)
{
    if (!fp.complete)
        throw std::invalid_argument("euler_characteristic needs a complete face poset");
    long long chi = 0;
    int sign = 1;
    for (auto count : fp.cell_counts()) {
        chi += sign * static_cast<long long>(count);
        sign = -sign;
    }
    return chi;
}

ChainComplex order_complex(const FacePoset& fp, std::uint64_t max_chains)
{
    const std::size_t m = fp.cells.size();

    // cofaces: cells covering each cell
    std::vector<std::vector<std::uint32_t>> cofaces(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::uint32_t f : fp.faces[i])
            cofaces[f].push_back(static_cast<std::uint32_t>(i));

    // strict supersets via upward reachability over covering edges
    std::vector<std::vector<std::uint32_t>> supersets(m);
    std::vector<std::uint32_t> stamp(m, 0);
    std::vector<std::uint32_t> stack;
    for (std::size_t i = 0; i < m; ++i) {
        std::uint32_t mark = static_cast<std::uint32_t>(i) + 1;
        stack.assign(cofaces[i].begin(), cofaces[i].end());
        while (!stack.empty()) {
            std::uint32_t j = stack.back();
            stack.pop_back();
            if (stamp[j] == mark)
                continue;
            stamp[j] = mark;
            supersets[i].push_back(j);
            for (std::uint32_t k : cofaces[j])
                stack.push_back(k);
        }
        std::sort(supersets[i].begin(), supersets[i].end());
    }

    // Chains enumerated depth-first with ascending starts and extensions; this
    // yields each dimension's simplex list already in lexicographic order.
    ChainComplex cc;
    std::uint64_t chain_count = 0;
    std::vector<std::uint32_t> chain;
    auto record = [&]() {
        if (++chain_count > max_chains)
            throw CapExceeded("order-complex chain count exceeds the configured cap ("
                    + std::to_string(max_chains) + ")");
        std::size_t d = chain.size() - 1;
        if (cc.simplices.size() <= d)
            cc.simplices.resize(d + 1);
        cc.simplices[d].push_back(chain);
    };
    auto extend = [&](auto&& self, std::uint32_t top) -> void {
        record();
        for (std::uint32_t j : supersets[top]) {
            chain.push_back(j);
            self(self, j);
            chain.pop_back();
        }
    };
    for (std::size_t i = 0; i < m; ++i) {
        chain.assign(1, static_cast<std::uint32_t>(i));
        extend(extend, static_cast<std::uint32_t>(i));
    }

    // GF(2) boundary matrices: one column per simplex, one set bit per facet.
    cc.boundary.resize(cc.simplices.size());
    for (std::size_t d = 1; d < cc.simplices.size(); ++d) {
        const auto& below = cc.simplices[d - 1];
        cc.boundary[d].reserve(cc.simplices[d].size());
        std::vector<std::uint32_t> facet;
        for (const auto& s : cc.simplices[d]) {
            Bitset col(static_cast<int>(below.size()));
            for (std::size_t k = 0; k < s.size(); ++k) {
                facet.clear();
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != k)
                        facet.push_back(s[j]);
                auto it = std::lower_bound(below.begin(), below.end(), facet);
                assert(it != below.end() && *it == facet);
                col.set(static_cast<int>(it - below.begin()));
            }
            cc.boundary[d].push_back(std::move(col));
        }
    }
    return cc;
}

int gf2_rank(std::vector<Bitset> columns)
{
    if (columns.empty())
        return 0;
    std::vector<int> pivot_col_of_row(columns[0].capacity(), -1);
    std::vector<Bitset> pivots;
    int rank = 0;
    for (auto& col : columns) {
        int r = col.first();
        while (r >= 0 && pivot_col_of_row[r] >= 0) {
            col ^= pivots[pivot_col_of_row[r]];
            r = col.first();
        }
        if (r >= 0) {
            pivot_col_of_row[r] = static_cast<int>(pivots.size());
            pivots.push_back(col);
            ++rank;
        }
    }
    return rank;
}

HomologyReport betti_gf2(const FacePoset& fp, std::uint64_t max_chains)
{
    if (!fp.complete)
        throw std::invalid_argument("betti_gf2 needs a complete face poset");
    HomologyReport rep;
    rep.cell_counts = fp.cell_counts();
    rep.euler = euler_characteristic(fp);

    ChainComplex cc = order_complex(fp, max_chains);
    std::size_t dims = cc.simplices.size();
    for (const auto& list : cc.simplices)
        rep.simplex_counts.push_back(list.size());

    std::vector<int> rank(dims + 1, 0);
    for (std::size_t d = 1; d < dims; ++d)
        rank[d] = gf2_rank(cc.boundary[d]);
    for (std::size_t d = 0; d < dims; ++d) {
        long long kernel = static_cast<long long>(cc.simplices[d].size()) - rank[d];
        rep.betti_gf2.push_back(kernel - rank[d + 1]);
    }
    return rep;
}

} // namespace homcx
