#include "homcx/flip_graph.hpp"

#include "homcx/parallel.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace homcx {

namespace {

    int hamming(const Coloring& a, const Coloring& b)
    {
        int d = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            d += a[i] != b[i];
        return d;
    }

    std::uint32_t uf_find(std::vector<std::uint32_t>& parent, std::uint32_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

} // namespace

std::uint32_t FlipGraph::component_root(std::uint32_t i) const
{
    while (parent[i] != i)
        i = parent[i];
    return i;
}

FlipGraph build_flip_graph(HomSet homset, int threads)
{
    FlipGraph fg;
    fg.homset = std::move(homset);
    const auto& cols = fg.homset.colorings;
    const std::size_t count = cols.size();
    const int n = fg.homset.g.n;
    fg.adjacency.assign(count, {});
    fg.parent.resize(count);
    std::iota(fg.parent.begin(), fg.parent.end(), 0u);
    if (count == 0)
        return fg;

    // One task per vertex position: bucket colorings by the assignment with
    // that position wildcarded; every pair inside a bucket is a flip edge.
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> per_pos(n);
    detail::run_tasks(n, threads, [&](int p) {
        std::vector<std::uint32_t> idx(count);
        std::iota(idx.begin(), idx.end(), 0u);
        auto key_less = [&](std::uint32_t a, std::uint32_t b) {
            const auto& ca = cols[a];
            const auto& cb = cols[b];
            for (int i = 0; i < n; ++i) {
                if (i == p)
                    continue;
                if (ca[i] != cb[i])
                    return ca[i] < cb[i];
            }
            return a < b;
        };
        auto key_eq = [&](std::uint32_t a, std::uint32_t b) {
            const auto& ca = cols[a];
            const auto& cb = cols[b];
            for (int i = 0; i < n; ++i)
                if (i != p && ca[i] != cb[i])
                    return false;
            return true;
        };
        std::sort(idx.begin(), idx.end(), key_less);
        std::size_t run = 0;
        while (run < count) {
            std::size_t end = run + 1;
            while (end < count && key_eq(idx[run], idx[end]))
                ++end;
            for (std::size_t i = run; i < end; ++i)
                for (std::size_t j = i + 1; j < end; ++j)
                    per_pos[p].emplace_back(idx[i], idx[j]);
            run = end;
        }
    });

    for (int p = 0; p < n; ++p) {
        for (auto [i, j] : per_pos[p]) {
            fg.adjacency[i].push_back(j);
            fg.adjacency[j].push_back(i);
            ++fg.edge_count;
            std::uint32_t ri = uf_find(fg.parent, i);
            std::uint32_t rj = uf_find(fg.parent, j);
            if (ri != rj)
                fg.parent[std::max(ri, rj)] = std::min(ri, rj);
        }
    }
    for (auto& nbrs : fg.adjacency)
        std::sort(nbrs.begin(), nbrs.end());
    return fg;
}

ComponentReport components(const FlipGraph& fg)
{
    ComponentReport rep;
    const std::size_t count = fg.homset.size();
    std::vector<std::int64_t> comp_of_root(count, -1);
    std::vector<int> sizes;
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < count; ++i) {
        std::uint32_t r = fg.component_root(static_cast<std::uint32_t>(i));
        if (comp_of_root[r] < 0) {
            comp_of_root[r] = static_cast<std::int64_t>(sizes.size());
            sizes.push_back(0);
            reps.push_back(i); // first index in a component is its lex-least coloring
        }
        ++sizes[comp_of_root[r]];
    }
    std::vector<std::size_t> by_size(sizes.size());
    std::iota(by_size.begin(), by_size.end(), std::size_t{0});
    std::sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
        if (sizes[a] != sizes[b])
            return sizes[a] > sizes[b];
        return reps[a] < reps[b];
    });
    rep.component_count = static_cast<int>(sizes.size());
    for (std::size_t k : by_size) {
        rep.sizes.push_back(sizes[k]);
        rep.representatives.push_back(reps[k]);
    }
    return rep;
}

namespace {

    std::size_t member_index(const FlipGraph& fg, std::span<const int> c, const char* which)
    {
        auto i = fg.homset.index_of(c);
        if (i < 0)
            throw std::invalid_argument(std::string(which) + " coloring is not in the homset");
        return static_cast<std::size_t>(i);
    }

} // namespace

bool is_edge(const FlipGraph& fg, std::span<const int> a, std::span<const int> b)
{
    std::size_t i = member_index(fg, a, "first");
    std::size_t j = member_index(fg, b, "second");
    if (i == j)
        return false;
    return hamming(fg.homset.colorings[i], fg.homset.colorings[j]) == 1;
}

std::optional<std::vector<Coloring>> shortest_path(const FlipGraph& fg,
    std::span<const int> from, std::span<const int> to)
{
    std::size_t src = member_index(fg, from, "source");
    std::size_t dst = member_index(fg, to, "target");
    std::vector<std::int64_t> parent(fg.homset.size(), -2); // -2 unseen, -1 root
    parent[src] = -1;
    std::deque<std::size_t> queue{src};
    while (!queue.empty() && parent[dst] == -2) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (std::uint32_t v : fg.adjacency[u]) { // ascending: ties go to the lowest index
            if (parent[v] == -2) {
                parent[v] = static_cast<std::int64_t>(u);
                queue.push_back(v);
            }
        }
    }
    if (parent[dst] == -2)
        return std::nullopt;
    std::vector<Coloring> path;
    for (std::int64_t v = static_cast<std::int64_t>(dst); v != -1; v = parent[v])
        path.push_back(fg.homset.colorings[v]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::string to_dot(const FlipGraph& fg)
{
    std::ostringstream out;
    out << "graph hom_flip {\n";
    for (std::size_t i = 0; i < fg.homset.size(); ++i)
        out << "  c" << i << " [label=\"" << coloring_to_text(fg.homset.colorings[i]) << "\"];\n";
    for (std::size_t i = 0; i < fg.homset.size(); ++i)
        for (std::uint32_t j : fg.adjacency[i])
            if (i < j)
                out << "  c" << i << " -- c" << j << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace homcx
