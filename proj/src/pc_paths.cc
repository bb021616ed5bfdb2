#include <pcpk/pc_paths.hh>
#include <pcpk/error.hh>

#include <algorithm>
#include <limits>

using std::nullopt;
using std::optional;
using std::span;
using std::string;
using std::vector;

namespace pcpk
{
    namespace
    {
        constexpr auto unreachable = std::numeric_limits<std::uint32_t>::max();

        auto check_vertex(const ColoredDigraph & d, Vertex v) -> void
        {
            if (v >= d.size())
                throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " with n = " + std::to_string(d.size()));
        }

        struct Backtracker
        {
            const ColoredDigraph & d;
            PathMode mode;
            const vector<char> & target;
            const vector<std::uint32_t> & remaining;
            std::size_t max_length;
            std::uint64_t budget;
            std::uint64_t steps = 0;

            vector<char> visited;
            vector<char> used_color;
            vector<Vertex> path;
            vector<Color> colors;

            auto extend(Vertex x, Color last) -> bool
            {
                auto out = d.out_arcs(x);
                for (std::size_t i = 0 ; i < out.size() ; ++i) {
                    auto & a = out[i];
                    auto bound = remaining[d.out_arc_id(x, i)];
                    if (bound == unreachable || a.color == last || visited[a.head])
                        continue;
                    if (colors.size() + bound > max_length)
                        continue;
                    if (mode == PathMode::Rainbow && used_color[a.color])
                        continue;

                    if (++steps > budget)
                        throw Error(Errc::BudgetExceeded, "PC path search exceeded " + std::to_string(budget) + " steps");

                    path.push_back(a.head);
                    colors.push_back(a.color);
                    if (target[a.head])
                        return true;
                    visited[a.head] = 1;
                    used_color[a.color] = 1;
                    if (extend(a.head, a.color))
                        return true;
                    visited[a.head] = 0;
                    used_color[a.color] = 0;
                    path.pop_back();
                    colors.pop_back();
                }
                return false;
            }
        };
    }

    auto PcPath::valid_in(const ColoredDigraph & d) const -> bool
    {
        if (vertices.size() < 2 || colors.size() + 1 != vertices.size())
            return false;
        vector<char> seen(d.size(), 0);
        for (auto v : vertices) {
            if (v >= d.size() || seen[v])
                return false;
            seen[v] = 1;
        }
        for (std::size_t i = 0 ; i < colors.size() ; ++i)
            if (d.color(vertices[i], vertices[i + 1]) != colors[i] || colors[i] == no_color)
                return false;
        if (mode == PathMode::ProperlyColored) {
            for (std::size_t i = 1 ; i < colors.size() ; ++i)
                if (colors[i] == colors[i - 1])
                    return false;
        }
        else {
            auto sorted = colors;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                return false;
        }
        return true;
    }

    auto path_labels(const ColoredDigraph & d, const PcPath & path) -> string
    {
        string out;
        for (auto v : path.vertices) {
            if (! out.empty())
                out += ' ';
            out += d.label(v);
        }
        return out;
    }

    PathSearcher::PathSearcher(const ColoredDigraph & d, PathMode mode, span<const Vertex> targets) :
        _d(&d),
        _mode(mode),
        _target(d.size(), 0),
        _remaining(d.arc_count(), unreachable)
    {
        for (auto t : targets) {
            check_vertex(d, t);
            _target[t] = 1;
        }

        vector<std::size_t> queue;
        for (auto t : targets)
            for (auto & in : d.in_arcs(t))
                if (_remaining[in.id] == unreachable) {
                    _remaining[in.id] = 1;
                    queue.push_back(in.id);
                }

        // Arc ids are positions in the global out-arc order, so we need the tail of each arc.
        vector<Vertex> tail(d.arc_count());
        for (Vertex v = 0 ; v < d.size() ; ++v)
            for (std::size_t i = 0 ; i < d.out_degree(v) ; ++i)
                tail[d.out_arc_id(v, i)] = v;
        vector<Color> arc_color(d.arc_count());
        for (Vertex v = 0 ; v < d.size() ; ++v)
            for (std::size_t i = 0 ; i < d.out_degree(v) ; ++i)
                arc_color[d.out_arc_id(v, i)] = d.out_arcs(v)[i].color;

        for (std::size_t head = 0 ; head < queue.size() ; ++head) {
            auto id = queue[head];
            auto y = tail[id];
            for (auto & in : d.in_arcs(y))
                if (in.color != arc_color[id] && _remaining[in.id] == unreachable) {
                    _remaining[in.id] = _remaining[id] + 1;
                    queue.push_back(in.id);
                }
        }
    }

    auto PathSearcher::walk_bound_allows(Vertex source) const -> bool
    {
        auto out = _d->out_arcs(source);
        for (std::size_t i = 0 ; i < out.size() ; ++i)
            if (_remaining[_d->out_arc_id(source, i)] != unreachable)
                return true;
        return false;
    }

    auto PathSearcher::find_from(Vertex source, const SearchOptions & options) const -> optional<PcPath>
    {
        check_vertex(*_d, source);
        if (_target[source])
            throw Error(Errc::SameVertex, "path search from a vertex of its own target set");
        if (! walk_bound_allows(source))
            return nullopt;
        for (auto & a : _d->out_arcs(source))
            if (_target[a.head])
                return PcPath{ { source, a.head }, { a.color }, _mode };

        Backtracker search{ *_d, _mode, _target, _remaining,
            options.max_length.value_or(std::numeric_limits<std::size_t>::max()), options.budget,
            0, vector<char>(_d->size(), 0), vector<char>(std::size_t(_d->color_count()) + 1, 0), { source }, {} };
        search.visited[source] = 1;
        if (! search.extend(source, no_color))
            return nullopt;
        return PcPath{ std::move(search.path), std::move(search.colors), _mode };
    }

    auto pc_path_exists(const ColoredDigraph & d, Vertex u, Vertex v, PathMode mode,
            const SearchOptions & options) -> optional<PcPath>
    {
        check_vertex(d, u);
        check_vertex(d, v);
        if (u == v)
            throw Error(Errc::SameVertex, "path query from a vertex to itself");
        Vertex targets[] = { v };
        return PathSearcher(d, mode, targets).find_from(u, options);
    }

    auto pc_path_to_set(const ColoredDigraph & d, Vertex u, span<const Vertex> targets, PathMode mode,
            const SearchOptions & options) -> optional<PcPath>
    {
        return PathSearcher(d, mode, targets).find_from(u, options);
    }

    auto pc_walk_reachable(const ColoredDigraph & d, Vertex u, Vertex v, PathMode) -> bool
    {
        check_vertex(d, u);
        check_vertex(d, v);
        if (u == v)
            throw Error(Errc::SameVertex, "walk query from a vertex to itself");

        // State (x, c): standing at x, having arrived by an arc of color c (0 at the start).
        auto stride = std::size_t(d.color_count()) + 1;
        vector<char> seen(d.size() * stride, 0);
        vector<std::pair<Vertex, Color>> queue{ { u, no_color } };
        seen[u * stride] = 1;
        for (std::size_t head = 0 ; head < queue.size() ; ++head) {
            auto [x, last] = queue[head];
            for (auto & a : d.out_arcs(x)) {
                if (a.color == last)
                    continue;
                if (a.head == v)
                    return true;
                auto & s = seen[a.head * stride + a.color];
                if (! s) {
                    s = 1;
                    queue.emplace_back(a.head, a.color);
                }
            }
        }
        return false;
    }

    auto distance(const ColoredDigraph & d, Vertex u, Vertex v) -> optional<std::size_t>
    {
        check_vertex(d, u);
        check_vertex(d, v);
        if (u == v)
            throw Error(Errc::SameVertex, "distance from a vertex to itself");
        vector<std::size_t> dist(d.size(), std::numeric_limits<std::size_t>::max());
        vector<Vertex> queue{ u };
        dist[u] = 0;
        for (std::size_t head = 0 ; head < queue.size() ; ++head) {
            auto x = queue[head];
            for (auto & a : d.out_arcs(x))
                if (dist[a.head] == std::numeric_limits<std::size_t>::max()) {
                    dist[a.head] = dist[x] + 1;
                    if (a.head == v)
                        return dist[a.head];
                    queue.push_back(a.head);
                }
        }
        return nullopt;
    }
}
