#include <pcpk/reduction.hh>
#include <pcpk/error.hh>

using std::string;
using std::vector;

namespace pcpk
{
    auto reduction_kernel_to_pathkernel(const PlainDigraph & d, Color m, PathMode mode) -> ReductionOutput
    {
        if (d.size() == 0)
            throw Error(Errc::EmptyDigraph, "the reduction needs at least one vertex");
        if (m == 0)
            throw Error(Errc::BadParameter, "the number of colors must be positive");

        auto n = d.size();
        auto extra = (std::size_t(m) + n - 1) / n;

        ReductionOutput out;
        out.mode = mode;
        vector<string> labels;
        vector<RawArc> arcs;
        for (Vertex v = 0 ; v < n ; ++v) {
            labels.push_back("v" + std::to_string(v));
            out.mapping.push_back(v);
        }
        for (auto [u, v] : d.arcs())
            arcs.push_back(RawArc{ u, v, 1 });

        std::size_t next = 0;
        for (std::size_t i = 0 ; i < extra ; ++i) {
            auto x = n + i;
            labels.push_back("x" + std::to_string(i));
            out.new_vertices.push_back(x);
            for (Vertex v = 0 ; v < n ; ++v)
                arcs.push_back(RawArc{ x, v, std::int64_t(next++ % m) + 1 });
        }
        out.d_prime = ColoredDigraph::validate(n + extra, arcs, std::move(labels));
        return out;
    }
}
