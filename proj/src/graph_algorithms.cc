#include <pcpk/graph_algorithms.hh>
#include <pcpk/error.hh>

#include <algorithm>
#include <limits>

using std::function;
using std::span;
using std::vector;

namespace pcpk
{
    auto adjacency_of(const ColoredDigraph & d) -> Adjacency
    {
        Adjacency adj(d.size());
        for (Vertex v = 0 ; v < d.size() ; ++v)
            for (auto & a : d.out_arcs(v))
                adj[v].push_back(a.head);
        return adj;
    }

    auto strong_components(const Adjacency & adj) -> Components
    {
        // Iterative Tarjan; it emits components in reverse topological order.
        auto n = adj.size();
        constexpr auto unvisited = std::numeric_limits<std::size_t>::max();
        vector<std::size_t> index(n, unvisited), low(n, 0), raw_component(n, unvisited);
        vector<char> on_stack(n, 0);
        vector<Vertex> stack;
        vector<std::pair<Vertex, std::size_t>> call;
        std::size_t counter = 0, found = 0;

        for (Vertex root = 0 ; root < n ; ++root) {
            if (index[root] != unvisited)
                continue;
            call.emplace_back(root, 0);
            while (! call.empty()) {
                auto & [v, next] = call.back();
                if (next == 0 && index[v] == unvisited) {
                    index[v] = low[v] = counter++;
                    stack.push_back(v);
                    on_stack[v] = 1;
                }
                if (next < adj[v].size()) {
                    auto w = adj[v][next++];
                    if (index[w] == unvisited)
                        call.emplace_back(w, 0);
                    else if (on_stack[w])
                        low[v] = std::min(low[v], index[w]);
                    continue;
                }
                if (low[v] == index[v]) {
                    Vertex w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        raw_component[w] = found;
                    } while (w != v);
                    ++found;
                }
                auto finished = v;
                call.pop_back();
                if (! call.empty())
                    low[call.back().first] = std::min(low[call.back().first], low[finished]);
            }
        }

        Components result;
        result.component.resize(n);
        result.members.resize(found);
        for (Vertex v = 0 ; v < n ; ++v) {
            result.component[v] = found - 1 - raw_component[v];
            result.members[result.component[v]].push_back(v);
        }
        return result;
    }

    auto is_acyclic(const Adjacency & adj) -> bool
    {
        vector<std::size_t> in_degree(adj.size(), 0);
        for (auto & out : adj)
            for (auto w : out)
                ++in_degree[w];
        vector<Vertex> queue;
        for (Vertex v = 0 ; v < adj.size() ; ++v)
            if (in_degree[v] == 0)
                queue.push_back(v);
        std::size_t done = 0;
        while (done < queue.size()) {
            auto v = queue[done++];
            for (auto w : adj[v])
                if (--in_degree[w] == 0)
                    queue.push_back(w);
        }
        return done == adj.size();
    }

    auto reachable_from(const Adjacency & adj, Vertex source) -> vector<char>
    {
        vector<char> seen(adj.size(), 0);
        vector<Vertex> todo{ source };
        seen[source] = 1;
        while (! todo.empty()) {
            auto v = todo.back();
            todo.pop_back();
            for (auto w : adj[v])
                if (! seen[w]) {
                    seen[w] = 1;
                    todo.push_back(w);
                }
        }
        return seen;
    }

    auto enumerate_cycles(const Adjacency & adj, std::size_t max_length,
            const function<auto (span<const Vertex>) -> bool> & visit, std::uint64_t max_cycles) -> std::uint64_t
    {
        auto n = adj.size();
        std::uint64_t cycles = 0, steps = 0;
        auto max_steps = max_cycles * 64 + 1'000'000;

        vector<Vertex> path;
        vector<char> on_path(n, 0);
        vector<char> allowed(n, 0);

        for (Vertex start = 0 ; start < n ; ++start) {
            // Restrict to the strong component of `start` inside the vertices >= start.
            Adjacency sub(n);
            for (Vertex v = start ; v < n ; ++v)
                for (auto w : adj[v])
                    if (w >= start)
                        sub[v].push_back(w);
            auto comps = strong_components(sub);
            auto own = comps.component[start];
            if (comps.members[own].size() < 2)
                continue;
            std::fill(allowed.begin(), allowed.end(), 0);
            for (auto v : comps.members[own])
                allowed[v] = 1;

            bool stop = false;
            path.assign(1, start);
            on_path[start] = 1;
            vector<std::size_t> cursor{ 0 };
            while (! cursor.empty() && ! stop) {
                auto v = path.back();
                auto & at = cursor.back();
                if (at >= sub[v].size()) {
                    on_path[v] = 0;
                    path.pop_back();
                    cursor.pop_back();
                    continue;
                }
                auto w = sub[v][at++];
                if (++steps > max_steps)
                    throw Error(Errc::BudgetExceeded, "cycle enumeration exceeded its step budget");
                if (! allowed[w])
                    continue;
                if (w == start) {
                    if (++cycles > max_cycles)
                        throw Error(Errc::BudgetExceeded, "more than " + std::to_string(max_cycles) + " cycles");
                    if (! visit(path))
                        stop = true;
                }
                else if (! on_path[w] && path.size() < max_length) {
                    path.push_back(w);
                    on_path[w] = 1;
                    cursor.push_back(0);
                }
            }
            for (auto v : path)
                on_path[v] = 0;
            on_path[start] = 0;
            if (stop)
                break;
        }
        return cycles;
    }
}
