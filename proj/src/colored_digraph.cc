#include <pcpk/colored_digraph.hh>
#include <pcpk/error.hh>

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

using std::map;
using std::optional;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace pcpk
{
    auto path_mode_name(PathMode mode) -> string
    {
        return mode == PathMode::Rainbow ? "rainbow" : "pc";
    }

    auto parse_path_mode(const string & text) -> PathMode
    {
        if (text == "pc" || text == "properly-colored")
            return PathMode::ProperlyColored;
        if (text == "rainbow")
            return PathMode::Rainbow;
        throw Error(Errc::BadParameter, "unknown path mode '" + text + "'");
    }

    auto default_label(Vertex v) -> string
    {
        return "v" + to_string(v);
    }

    auto ColoredDigraph::validate(std::size_t n, span<const RawArc> arcs, vector<string> labels) -> ColoredDigraph
    {
        if (labels.empty())
            for (Vertex v = 0 ; v < n ; ++v)
                labels.push_back(default_label(v));
        else if (labels.size() != n)
            throw Error(Errc::BadParameter, "label count " + to_string(labels.size()) + " does not match vertex count " + to_string(n));

        std::unordered_set<string> seen_labels;
        for (auto & l : labels)
            if (! seen_labels.insert(l).second)
                throw Error(Errc::BadParameter, "duplicate vertex label '" + l + "'");

        map<std::int64_t, Color> compaction;
        for (auto & a : arcs) {
            if (a.from >= n || a.to >= n)
                throw Error(Errc::VertexOutOfRange, "arc (" + to_string(a.from) + "," + to_string(a.to) + ") with n = " + to_string(n));
            if (a.from == a.to)
                throw Error(Errc::LoopArc, "loop at vertex " + labels[a.from]);
            if (a.color <= 0)
                throw Error(Errc::NonPositiveColor, "arc " + labels[a.from] + "->" + labels[a.to] + " has color " + to_string(a.color));
            compaction.emplace(a.color, 0);
        }
        Color next = 0;
        for (auto & [raw, compact] : compaction)
            compact = ++next;

        ColoredDigraph d;
        d._n = n;
        d._labels = std::move(labels);
        d._colors = next;
        d._matrix.assign(n * n, no_color);
        for (auto & a : arcs) {
            auto & cell = d._matrix[a.from * n + a.to];
            if (cell != no_color)
                throw Error(Errc::DuplicateArc, "arc " + d._labels[a.from] + "->" + d._labels[a.to] + " given twice");
            cell = compaction.at(a.color);
        }

        d._out_offsets.assign(n + 1, 0);
        d._in_offsets.assign(n + 1, 0);
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = 0 ; v < n ; ++v)
                if (d._matrix[u * n + v] != no_color) {
                    ++d._out_offsets[u + 1];
                    ++d._in_offsets[v + 1];
                }
        for (Vertex v = 0 ; v < n ; ++v) {
            d._out_offsets[v + 1] += d._out_offsets[v];
            d._in_offsets[v + 1] += d._in_offsets[v];
        }

        d._out.resize(arcs.size());
        d._in.resize(arcs.size());
        vector<std::size_t> in_fill(d._in_offsets.begin(), d._in_offsets.end() - 1);
        std::size_t id = 0;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = 0 ; v < n ; ++v)
                if (auto c = d._matrix[u * n + v] ; c != no_color) {
                    d._out[id] = OutArc{ v, c };
                    d._in[in_fill[v]++] = InArc{ u, c, id };
                    ++id;
                }

        return d;
    }

    auto ColoredDigraph::find_label(const string & text) const -> optional<Vertex>
    {
        auto it = std::find(_labels.begin(), _labels.end(), text);
        if (it == _labels.end())
            return std::nullopt;
        return Vertex(it - _labels.begin());
    }

    auto ColoredDigraph::arcs() const -> vector<Arc>
    {
        vector<Arc> result;
        result.reserve(_out.size());
        for (Vertex u = 0 ; u < _n ; ++u)
            for (auto & a : out_arcs(u))
                result.push_back(Arc{ u, a.head, a.color });
        return result;
    }

    auto ColoredDigraph::induced(span<const Vertex> keep) const -> ColoredDigraph
    {
        vector<std::size_t> position(_n, _n);
        vector<string> labels;
        for (std::size_t i = 0 ; i < keep.size() ; ++i) {
            position[keep[i]] = i;
            labels.push_back(_labels[keep[i]]);
        }

        vector<RawArc> raw;
        for (auto & a : arcs())
            if (position[a.from] != _n && position[a.to] != _n)
                raw.push_back(RawArc{ position[a.from], position[a.to], std::int64_t(a.color) });

        return validate(keep.size(), raw, std::move(labels));
    }
}
