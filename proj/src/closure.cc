#include <pcpk/closure.hh>
#include <pcpk/parallel.hh>

using std::optional;
using std::string;
using std::vector;

namespace pcpk
{
    ClosureDigraph::ClosureDigraph(PlainDigraph graph, vector<optional<PcPath>> witness, PathMode mode) :
        _graph(std::move(graph)),
        _witness(std::move(witness)),
        _mode(mode)
    {
    }

    auto closure(const ColoredDigraph & d, PathMode mode, const ClosureOptions & options) -> ClosureDigraph
    {
        auto n = d.size();
        vector<optional<PcPath>> witness(n * n);
        SearchOptions search;
        search.budget = options.budget;

        parallel_for(n, options.jobs, [&] (std::size_t target) {
            Vertex targets[] = { target };
            PathSearcher searcher(d, mode, targets);
            for (Vertex source = 0 ; source < n ; ++source)
                if (source != target)
                    witness[source * n + target] = searcher.find_from(source, search);
        });

        vector<VertexPair> arcs;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = 0 ; v < n ; ++v)
                if (witness[u * n + v])
                    arcs.emplace_back(u, v);
        return ClosureDigraph(PlainDigraph::from_arcs(n, arcs), std::move(witness), mode);
    }

    auto closure_as_colored(const ColoredDigraph & d, const ClosureDigraph & c) -> ColoredDigraph
    {
        vector<RawArc> raw;
        for (auto [u, v] : c.graph().arcs())
            raw.push_back(RawArc{ u, v, 1 });
        return ColoredDigraph::validate(d.size(), raw, d.labels());
    }

    auto closure_witness_text(const ColoredDigraph & d, const ClosureDigraph & c) -> string
    {
        string out;
        for (auto [u, v] : c.graph().arcs())
            out += "w " + d.label(u) + " " + d.label(v) + " : " + path_labels(d, c.witness(u, v)) + "\n";
        return out;
    }
}
