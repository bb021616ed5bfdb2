#include <pcpk/conditions.hh>
#include <pcpk/error.hh>

#include <algorithm>

using std::span;
using std::vector;

namespace pcpk
{
    namespace
    {
        auto rotate_to_least(vector<Vertex> cycle) -> vector<Vertex>
        {
            std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
            return cycle;
        }

        /// Shortest path from `from` to `to` avoiding `blocked`, as a vertex list; empty if none.
        auto path_avoiding(const ColoredDigraph & d, Vertex from, Vertex to, Vertex blocked) -> vector<Vertex>
        {
            constexpr auto none = static_cast<Vertex>(-1);
            vector<Vertex> parent(d.size(), none);
            vector<Vertex> queue{ from };
            parent[from] = from;
            for (std::size_t head = 0 ; head < queue.size() ; ++head) {
                auto x = queue[head];
                if (x == to)
                    break;
                for (auto & a : d.out_arcs(x))
                    if (a.head != blocked && parent[a.head] == none) {
                        parent[a.head] = x;
                        queue.push_back(a.head);
                    }
            }
            if (parent[to] == none)
                return {};
            vector<Vertex> path;
            for (auto v = to ; v != from ; v = parent[v])
                path.push_back(v);
            path.push_back(from);
            std::reverse(path.begin(), path.end());
            return path;
        }
    }

    auto cycle_is_properly_colored(const ColoredDigraph & d, span<const Vertex> cycle) -> bool
    {
        auto k = cycle.size();
        for (std::size_t i = 0 ; i < k ; ++i)
            if (d.color(cycle[i], cycle[(i + 1) % k]) == d.color(cycle[(i + 1) % k], cycle[(i + 2) % k]))
                return false;
        return true;
    }

    auto all_cycles_properly_colored(const ColoredDigraph & d) -> ConditionResult
    {
        for (Vertex u = 0 ; u < d.size() ; ++u)
            for (auto & a : d.out_arcs(u))
                if (a.head > u && d.color(a.head, u) == a.color)
                    return { false, { u, a.head } };

        for (Vertex v = 0 ; v < d.size() ; ++v)
            for (auto & in : d.in_arcs(v))
                for (auto & out : d.out_arcs(v)) {
                    if (out.head == in.tail || out.color != in.color)
                        continue;
                    auto back = path_avoiding(d, out.head, in.tail, v);
                    if (back.empty())
                        continue;
                    vector<Vertex> cycle{ in.tail, v };
                    cycle.insert(cycle.end(), back.begin(), back.end() - 1);
                    return { false, rotate_to_least(std::move(cycle)) };
                }
        return {};
    }

    auto k_cycles_properly_colored(const ColoredDigraph & d, const std::set<std::size_t> & lengths,
            std::uint64_t cycle_budget) -> ConditionResult
    {
        if (lengths.empty())
            return {};
        if (*lengths.begin() < 2)
            throw Error(Errc::BadParameter, "cycle lengths must be at least 2");

        ConditionResult result;
        enumerate_cycles(adjacency_of(d), *lengths.rbegin(), [&] (span<const Vertex> cycle) {
            if (lengths.contains(cycle.size()) && ! cycle_is_properly_colored(d, cycle)) {
                result = { false, vector<Vertex>(cycle.begin(), cycle.end()) };
                return false;
            }
            return true;
        }, cycle_budget);
        return result;
    }

    auto has_monochromatic_triangle(const ColoredDigraph & d) -> ConditionResult
    {
        for (Vertex u = 0 ; u < d.size() ; ++u)
            for (auto & a : d.out_arcs(u)) {
                if (a.head < u)
                    continue;
                for (auto & b : d.out_arcs(a.head))
                    if (b.head > u && b.color == a.color && d.color(b.head, u) == a.color)
                        return { true, { u, a.head, b.head } };
            }
        return { false, {} };
    }
}
