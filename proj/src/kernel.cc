#include <pcpk/kernel.hh>
#include <pcpk/error.hh>

#include <algorithm>
#include <cstdint>
#include <numeric>

using std::nullopt;
using std::optional;
using std::span;
using std::string;
using std::vector;

namespace pcpk
{
    namespace
    {
        enum : std::uint8_t { undecided = 0, included = 1, excluded = 2 };

        struct SearchState
        {
            vector<std::uint8_t> status;
            vector<std::uint32_t> open;       // out-neighbors not excluded
            vector<std::uint32_t> absorbed;   // out-neighbors included
        };

        class KernelSearch
        {
            private:
                const PlainDigraph & _h;
                vector<Vertex> _order;
                bool _collect_all;
                vector<vector<Vertex>> _found;

                auto check(SearchState & s, Vertex u, vector<std::pair<Vertex, std::uint8_t>> & pending) -> bool
                {
                    if (s.absorbed[u] > 0)
                        return true;
                    if (s.status[u] == excluded) {
                        if (s.open[u] == 0)
                            return false;
                        if (s.open[u] == 1)
                            for (auto w : _h.out(u))
                                if (s.status[w] == undecided) {
                                    pending.emplace_back(w, included);
                                    break;
                                }
                    }
                    else if (s.status[u] == undecided && s.open[u] == 0)
                        pending.emplace_back(u, included);
                    return true;
                }

                auto propagate(SearchState & s, vector<std::pair<Vertex, std::uint8_t>> pending) -> bool
                {
                    while (! pending.empty()) {
                        auto [v, value] = pending.back();
                        pending.pop_back();
                        if (s.status[v] == value)
                            continue;
                        if (s.status[v] != undecided)
                            return false;
                        s.status[v] = value;

                        if (value == included) {
                            for (auto * side : { &_h.out(v), &_h.in(v) })
                                for (auto w : *side) {
                                    if (s.status[w] == included)
                                        return false;
                                    if (s.status[w] == undecided)
                                        pending.emplace_back(w, excluded);
                                }
                            for (auto u : _h.in(v))
                                ++s.absorbed[u];
                        }
                        else {
                            for (auto u : _h.in(v)) {
                                --s.open[u];
                                if (! check(s, u, pending))
                                    return false;
                            }
                            if (! check(s, v, pending))
                                return false;
                        }
                    }
                    return true;
                }

                auto search(const SearchState & s) -> bool
                {
                    auto next = std::find_if(_order.begin(), _order.end(), [&] (Vertex v) { return s.status[v] == undecided; });
                    if (next == _order.end()) {
                        vector<Vertex> members;
                        for (Vertex v = 0 ; v < _h.size() ; ++v)
                            if (s.status[v] == included)
                                members.push_back(v);
                        if (! is_kernel(_h, members))
                            return false;
                        _found.push_back(std::move(members));
                        return ! _collect_all;
                    }

                    for (auto value : { included, excluded }) {
                        auto child = s;
                        if (propagate(child, { { *next, value } }) && search(child))
                            return true;
                    }
                    return false;
                }

            public:
                KernelSearch(const PlainDigraph & h, vector<Vertex> order, bool collect_all) :
                    _h(h),
                    _order(std::move(order)),
                    _collect_all(collect_all)
                {
                    if (_order.empty()) {
                        _order.resize(h.size());
                        std::iota(_order.begin(), _order.end(), 0);
                        std::stable_sort(_order.begin(), _order.end(), [&] (Vertex a, Vertex b) {
                            return h.out(a).size() > h.out(b).size();
                        });
                    }
                    else {
                        auto sorted = _order;
                        std::sort(sorted.begin(), sorted.end());
                        vector<Vertex> identity(h.size());
                        std::iota(identity.begin(), identity.end(), 0);
                        if (sorted != identity)
                            throw Error(Errc::BadParameter, "branch order must be a permutation of the vertices");
                    }
                }

                auto run() -> vector<vector<Vertex>>
                {
                    SearchState s{ vector<std::uint8_t>(_h.size(), undecided), vector<std::uint32_t>(_h.size()),
                        vector<std::uint32_t>(_h.size(), 0) };
                    vector<std::pair<Vertex, std::uint8_t>> pending;
                    for (Vertex v = 0 ; v < _h.size() ; ++v) {
                        s.open[v] = std::uint32_t(_h.out(v).size());
                        if (s.open[v] == 0)
                            pending.emplace_back(v, included);
                    }
                    if (propagate(s, pending))
                        search(s);
                    return std::move(_found);
                }
        };
    }

    auto is_kernel(const PlainDigraph & h, span<const Vertex> s) -> bool
    {
        vector<char> member(h.size(), 0);
        for (auto v : s) {
            if (v >= h.size())
                throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " with n = " + std::to_string(h.size()));
            member[v] = 1;
        }
        for (Vertex v = 0 ; v < h.size() ; ++v) {
            bool absorbed = false;
            for (auto w : h.out(v)) {
                if (member[v] && member[w])
                    return false;
                absorbed = absorbed || member[w];
            }
            if (! member[v] && ! absorbed)
                return false;
        }
        return true;
    }

    auto certify_kernel(const PlainDigraph & h, span<const Vertex> s) -> optional<KernelSet>
    {
        if (! is_kernel(h, s))
            return nullopt;
        KernelSet k;
        k.members.assign(s.begin(), s.end());
        std::sort(k.members.begin(), k.members.end());
        k.members.erase(std::unique(k.members.begin(), k.members.end()), k.members.end());
        vector<char> member(h.size(), 0);
        for (auto v : k.members)
            member[v] = 1;
        for (Vertex v = 0 ; v < h.size() ; ++v)
            if (! member[v])
                for (auto w : h.out(v))
                    if (member[w]) {
                        k.absorption.emplace_back(v, w);
                        break;
                    }
        return k;
    }

    auto find_kernel(const PlainDigraph & h, const KernelSearchOptions & options) -> optional<KernelSet>
    {
        auto found = KernelSearch(h, options.branch_order, false).run();
        if (found.empty())
            return nullopt;
        return certify_kernel(h, found.front());
    }

    auto all_kernels(const PlainDigraph & h) -> vector<KernelSet>
    {
        if (h.size() > all_kernels_limit)
            throw Error(Errc::TooLarge, "all_kernels is limited to " + std::to_string(all_kernels_limit) + " vertices");
        auto found = KernelSearch(h, {}, true).run();
        std::sort(found.begin(), found.end());
        vector<KernelSet> result;
        for (auto & members : found)
            result.push_back(*certify_kernel(h, members));
        return result;
    }

    auto kernel_of_acyclic(const PlainDigraph & h) -> KernelSet
    {
        if (! is_acyclic(h.out_adjacency()))
            throw Error(Errc::NotAcyclic, "kernel_of_acyclic needs an acyclic digraph");

        vector<char> alive(h.size(), 1), member(h.size(), 0);
        std::size_t remaining = h.size();
        while (remaining > 0) {
            vector<Vertex> sinks;
            for (Vertex v = 0 ; v < h.size() ; ++v)
                if (alive[v] && std::none_of(h.out(v).begin(), h.out(v).end(), [&] (Vertex w) { return alive[w]; }))
                    sinks.push_back(v);
            for (auto s : sinks)
                member[s] = 1;
            for (auto s : sinks) {
                if (alive[s]) {
                    alive[s] = 0;
                    --remaining;
                }
                for (auto u : h.in(s))
                    if (alive[u]) {
                        alive[u] = 0;
                        --remaining;
                    }
            }
        }

        vector<Vertex> members;
        for (Vertex v = 0 ; v < h.size() ; ++v)
            if (member[v])
                members.push_back(v);
        return *certify_kernel(h, members);
    }

    auto has_odd_cycle(const PlainDigraph & h) -> bool
    {
        // A strong digraph has an odd cycle iff its underlying graph is not bipartite.
        auto comps = strong_components(h.out_adjacency());
        vector<int> side(h.size(), -1);
        for (auto & members : comps.members) {
            if (members.size() < 2)
                continue;
            auto own = comps.component[members.front()];
            side[members.front()] = 0;
            vector<Vertex> todo{ members.front() };
            while (! todo.empty()) {
                auto v = todo.back();
                todo.pop_back();
                for (auto * neighbors : { &h.out(v), &h.in(v) })
                    for (auto w : *neighbors) {
                        if (comps.component[w] != own)
                            continue;
                        if (side[w] == -1) {
                            side[w] = 1 - side[v];
                            todo.push_back(w);
                        }
                        else if (side[w] == side[v])
                            return true;
                    }
            }
        }
        return false;
    }

    auto every_cycle_has_symmetrical_arc(const PlainDigraph & h) -> bool
    {
        Adjacency non_symmetrical(h.size());
        for (auto [u, v] : h.arcs())
            if (! h.has_arc(v, u))
                non_symmetrical[u].push_back(v);
        return is_acyclic(non_symmetrical);
    }

    auto precondition_checks(const PlainDigraph & h, std::uint64_t cycle_budget) -> PreconditionReport
    {
        PreconditionReport r;
        r.has_odd_cycle = has_odd_cycle(h);
        r.every_cycle_has_symmetrical_arc = every_cycle_has_symmetrical_arc(h);
        r.every_odd_cycle_has_crossing_consecutive = true;
        r.every_odd_cycle_has_two_chords_adjacent_heads = true;

        bool need_odd = r.has_odd_cycle;
        enumerate_cycles(h.out_adjacency(), h.size(), [&] (span<const Vertex> cycle) {
            auto k = cycle.size();
            if (k % 2 == 0) {
                r.has_even_cycle = true;
                return need_odd && (r.every_odd_cycle_has_crossing_consecutive || r.every_odd_cycle_has_two_chords_adjacent_heads);
            }

            bool crossing = false;
            for (std::size_t i = 0 ; i < k && ! crossing ; ++i)
                crossing = h.has_arc(cycle[i], cycle[(i + 2) % k]) && h.has_arc(cycle[(i + 1) % k], cycle[(i + 3) % k]);
            if (! crossing)
                r.every_odd_cycle_has_crossing_consecutive = false;

            // chord heads: a cycle vertex is a chord head if some other cycle vertex, not its
            // cycle predecessor, has an arc into it
            vector<char> on_cycle(h.size(), 0);
            for (auto v : cycle)
                on_cycle[v] = 1;
            vector<char> chord_head(k, 0);
            for (std::size_t i = 0 ; i < k ; ++i) {
                auto predecessor = cycle[(i + k - 1) % k];
                for (auto u : h.in(cycle[i]))
                    if (on_cycle[u] && u != predecessor)
                        chord_head[i] = 1;
            }
            bool chords = false;
            for (std::size_t i = 0 ; i < k && ! chords ; ++i)
                chords = chord_head[i] && chord_head[(i + 1) % k];
            if (! chords)
                r.every_odd_cycle_has_two_chords_adjacent_heads = false;

            return ! r.has_even_cycle || r.every_odd_cycle_has_crossing_consecutive
                || r.every_odd_cycle_has_two_chords_adjacent_heads;
        }, cycle_budget);

        return r;
    }

    auto format_kernel(const KernelSet & k, const vector<string> & labels) -> string
    {
        string out = "K: {";
        for (std::size_t i = 0 ; i < k.members.size() ; ++i)
            out += (i ? "," : "") + labels[k.members[i]];
        out += "}\n";
        for (auto [v, s] : k.absorption)
            out += "abs " + labels[v] + " -> " + labels[s] + "\n";
        return out;
    }
}
