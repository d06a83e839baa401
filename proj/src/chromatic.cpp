#include "homcx/chromatic.hpp"

#include "homcx/errors.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace homcx {

bool is_proper(const Graph& g, std::span<const int> coloring, int k)
{
    if (static_cast<int>(coloring.size()) != g.n)
        throw std::invalid_argument("coloring length does not match vertex count");
    for (int c : coloring)
        if (c < 0 || c >= k)
            throw std::invalid_argument("color out of range 0..k-1");
    for (auto [u, v] : g.edges)
        if (coloring[u] == coloring[v])
            return false;
    return true;
}

namespace {

    // Grow a clique greedily from every seed vertex, keeping the best; the
    // next member maximizes adjacency into the remaining candidate set.
    std::vector<int> greedy_max_clique(const Graph& g)
    {
        std::vector<int> best;
        for (int seed = 0; seed < g.n; ++seed) {
            std::vector<int> clique{seed};
            Bitset cand = g.adj[seed];
            while (cand.any()) {
                int pick = -1, pick_score = -1;
                for (int u = cand.first(); u >= 0; u = cand.next(u)) {
                    Bitset t = g.adj[u];
                    t &= cand;
                    int score = t.count();
                    if (score > pick_score) {
                        pick_score = score;
                        pick = u;
                    }
                }
                clique.push_back(pick);
                cand &= g.adj[pick];
            }
            if (clique.size() > best.size())
                best = clique;
        }
        return best;
    }

    // Classic DSATUR: repeatedly color the uncolored vertex with the most
    // distinctly colored neighbors (ties: higher degree, then lower index).
    std::pair<std::vector<int>, int> dsatur(const Graph& g)
    {
        std::vector<int> color(g.n, -1);
        std::vector<std::uint64_t> neighbor_colors(g.n, 0);
        int used = 0;
        for (int step = 0; step < g.n; ++step) {
            int pick = -1, pick_sat = -1, pick_deg = -1;
            for (int v = 0; v < g.n; ++v) {
                if (color[v] >= 0)
                    continue;
                int sat = std::popcount(neighbor_colors[v]);
                int deg = g.degree(v);
                if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                    pick = v;
                    pick_sat = sat;
                    pick_deg = deg;
                }
            }
            int c = std::countr_one(neighbor_colors[pick]); // lowest absent color
            color[pick] = c;
            used = std::max(used, c + 1);
            for (int u = g.adj[pick].first(); u >= 0; u = g.adj[pick].next(u))
                neighbor_colors[u] |= 1ull << c;
        }
        return {color, used};
    }

    struct KColorSearch {
        const Graph& g;
        int k;
        std::uint64_t full;
        std::vector<int> color;
        std::vector<std::uint64_t> domain;

        KColorSearch(const Graph& g_, int k_)
            : g(g_)
            , k(k_)
            , full(k_ >= 64 ? ~0ull : (1ull << k_) - 1)
            , color(g_.n, -1)
            , domain(g_.n, full)
        {
        }

        bool assign(int v, int c)
        {
            color[v] = c;
            for (int u = g.adj[v].first(); u >= 0; u = g.adj[v].next(u)) {
                if (color[u] < 0) {
                    domain[u] &= ~(1ull << c);
                    if (domain[u] == 0)
                        return false;
                }
            }
            return true;
        }

        bool search()
        {
            // fail-first: fewest remaining candidate colors, ties by index
            int pick = -1, pick_size = 65;
            for (int v = 0; v < g.n; ++v) {
                if (color[v] >= 0)
                    continue;
                int size = std::popcount(domain[v]);
                if (size < pick_size) {
                    pick_size = size;
                    pick = v;
                }
            }
            if (pick < 0)
                return true;
            std::uint64_t cands = domain[pick];
            auto saved_domain = domain;
            while (cands) {
                int c = std::countr_zero(cands);
                cands &= cands - 1;
                if (assign(pick, c) && search())
                    return true;
                color[pick] = -1;
                domain = saved_domain;
            }
            return false;
        }
    };

    std::optional<std::vector<int>> k_colorable(const Graph& g, int k, int pinned)
    {
        if (k < 1)
            return std::nullopt;
        KColorSearch s(g, k);
        // pin one clique vertex to color 0 to prune color permutations
        if (pinned >= 0 && !s.assign(pinned, 0))
            return std::nullopt;
        if (!s.search())
            return std::nullopt;
        return s.color;
    }

} // namespace

ChromaticResult chromatic_number(const Graph& g)
{
    if (g.n < 1)
        throw std::invalid_argument("chromatic_number needs at least one vertex");
    if (g.n > 64)
        throw CapExceeded("chromatic_number supports at most 64 vertices");

    ChromaticResult res;
    res.lower_bound_clique = greedy_max_clique(g);
    auto [ub_coloring, ub] = dsatur(g);
    int lb = static_cast<int>(res.lower_bound_clique.size());

    res.chi = ub;
    res.witness = ub_coloring;
    for (int k = lb; k < ub; ++k) {
        if (auto w = k_colorable(g, k, res.lower_bound_clique[0])) {
            res.chi = k;
            res.witness = *w;
            break;
        }
    }
    assert(is_proper(g, res.witness, res.chi));
    return res;
}

} // namespace homcx
