#include <pcpk/plain_digraph.hh>
#include <pcpk/error.hh>

#include <algorithm>

using std::span;
using std::to_string;
using std::vector;

namespace pcpk
{
    auto PlainDigraph::from_arcs(std::size_t n, span<const VertexPair> arcs) -> PlainDigraph
    {
        PlainDigraph h;
        h._n = n;
        h._matrix.assign(n * n, 0);
        h._out.assign(n, {});
        h._in.assign(n, {});
        for (auto [u, v] : arcs) {
            if (u >= n || v >= n)
                throw Error(Errc::VertexOutOfRange, "arc (" + to_string(u) + "," + to_string(v) + ") with n = " + to_string(n));
            if (u == v)
                throw Error(Errc::LoopArc, "loop at vertex " + to_string(u));
            if (h._matrix[u * n + v])
                throw Error(Errc::DuplicateArc, "arc (" + to_string(u) + "," + to_string(v) + ") given twice");
            h._matrix[u * n + v] = 1;
        }
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = 0 ; v < n ; ++v)
                if (h._matrix[u * n + v]) {
                    h._out[u].push_back(v);
                    h._in[v].push_back(u);
                }
        return h;
    }

    auto PlainDigraph::underlying(const ColoredDigraph & d) -> PlainDigraph
    {
        vector<VertexPair> arcs;
        for (auto & a : d.arcs())
            arcs.emplace_back(a.from, a.to);
        return from_arcs(d.size(), arcs);
    }

    auto PlainDigraph::arc_count() const -> std::size_t
    {
        return std::count(_matrix.begin(), _matrix.end(), 1);
    }

    auto PlainDigraph::arcs() const -> vector<VertexPair>
    {
        vector<VertexPair> result;
        for (Vertex u = 0 ; u < _n ; ++u)
            for (auto v : _out[u])
                result.emplace_back(u, v);
        return result;
    }
}
