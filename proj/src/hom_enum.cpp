#include "homcx/hom_enum.hpp"

#include "homcx/errors.hpp"
#include "homcx/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>

namespace homcx {

bool is_homomorphism(const Graph& g, const Graph& h, std::span<const int> assignment)
{
    if (static_cast<int>(assignment.size()) != g.n)
        return false;
    for (int c : assignment)
        if (c < 0 || c >= h.n)
            return false;
    for (auto [x, y] : g.edges)
        if (!h.has_edge(assignment[x], assignment[y]))
            return false;
    return true;
}

std::vector<int> elimination_order(const Graph& g)
{
    std::vector<int> order(g.n);
    for (int v = 0; v < g.n; ++v)
        order[v] = v;
    std::stable_sort(order.begin(), order.end(),
        [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

namespace {

    struct HomSearch {
        const Graph& g;
        const Graph& h;
        std::vector<int> order;
        std::vector<int> pos; // order position per vertex

        HomSearch(const Graph& g_, const Graph& h_)
            : g(g_)
            , h(h_)
            , order(elimination_order(g_))
            , pos(g_.n)
        {
            for (int i = 0; i < g.n; ++i)
                pos[order[i]] = i;
        }

        Bitset candidates(int depth, const std::vector<int>& assignment) const
        {
            int v = order[depth];
            Bitset cand = Bitset::full(h.n);
            for (int u = g.adj[v].first(); u >= 0; u = g.adj[v].next(u))
                if (pos[u] < depth)
                    cand &= h.adj[assignment[u]];
            return cand;
        }

        // visit(assignment) for every completion; returns false to abort.
        template <class Visit>
        bool search(int depth, std::vector<int>& assignment, const Visit& visit) const
        {
            if (depth == g.n)
                return visit(assignment);
            Bitset cand = candidates(depth, assignment);
            int v = order[depth];
            for (int c = cand.first(); c >= 0; c = cand.next(c)) {
                assignment[v] = c;
                if (!search(depth + 1, assignment, visit))
                    return false;
            }
            return true;
        }
    };

} // namespace

HomSet enumerate_homs(const Graph& g, const Graph& h, const HomEnumOptions& opt)
{
    if (g.n < 1 || h.n < 1)
        throw std::invalid_argument("enumerate_homs needs nonempty graphs");

    HomSearch s(g, h);
    int first = s.order[0];
    std::vector<std::vector<Coloring>> per_task(h.n);
    std::atomic<std::uint64_t> produced{0};
    std::atomic<bool> over_cap{false};

    // Partitioning the search by the first vertex's color keeps one code path
    // for any thread count; the final sort makes the output order canonical.
    detail::run_tasks(h.n, opt.threads, [&](int c) {
        std::vector<int> assignment(g.n, -1);
        assignment[first] = c;
        s.search(1, assignment, [&](const std::vector<int>& a) {
            if (produced.fetch_add(1) + 1 > opt.max_colorings) {
                over_cap.store(true);
                return false;
            }
            per_task[c].push_back(a);
            return true;
        });
    });
    if (over_cap.load())
        throw CapExceeded("homomorphism count exceeds the configured cap ("
                + std::to_string(opt.max_colorings) + ")");

    HomSet hs;
    hs.g = g;
    hs.h = h;
    std::size_t total = 0;
    for (const auto& part : per_task)
        total += part.size();
    hs.colorings.reserve(total);
    for (auto& part : per_task)
        for (auto& c : part)
            hs.colorings.push_back(std::move(c));
    std::sort(hs.colorings.begin(), hs.colorings.end());
    return hs;
}

std::uint64_t count_homs(const Graph& g, const Graph& h, int threads)
{
    if (g.n < 1 || h.n < 1)
        throw std::invalid_argument("count_homs needs nonempty graphs");
    HomSearch s(g, h);
    int first = s.order[0];
    std::vector<std::uint64_t> per_task(h.n, 0);
    detail::run_tasks(h.n, threads, [&](int c) {
        std::vector<int> assignment(g.n, -1);
        assignment[first] = c;
        s.search(1, assignment, [&](const std::vector<int>&) {
            ++per_task[c];
            return true;
        });
    });
    std::uint64_t total = 0;
    for (auto x : per_task)
        total += x;
    return total;
}

std::ptrdiff_t HomSet::index_of(std::span<const int> assignment) const
{
    auto it = std::lower_bound(colorings.begin(), colorings.end(), assignment,
        [](const Coloring& c, std::span<const int> key) {
            return std::lexicographical_compare(c.begin(), c.end(), key.begin(), key.end());
        });
    if (it == colorings.end() || it->size() != assignment.size()
        || !std::equal(it->begin(), it->end(), assignment.begin()))
        return -1;
    return it - colorings.begin();
}

std::string coloring_to_text(const Coloring& c)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            out << ' ';
        out << c[i] + 1;
    }
    return out.str();
}

Coloring coloring_from_text(std::string_view text, int color_count)
{
    std::istringstream in{std::string(text)};
    Coloring c;
    long long x;
    while (in >> x) {
        if (x < 1 || x > color_count)
            throw std::invalid_argument("color out of range 1.." + std::to_string(color_count));
        c.push_back(static_cast<int>(x - 1));
    }
    if (!in.eof())
        throw std::invalid_argument("malformed coloring text");
    return c;
}

} // namespace homcx
