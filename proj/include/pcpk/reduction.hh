#pragma once

#include <pcpk/colored_digraph.hh>
#include <pcpk/plain_digraph.hh>

#include <vector>

namespace pcpk
{
    /// D' = D plus ceil(m / |V(D)|) new vertices with every arc from a new vertex to V(D).
    /// D keeps color 1; the new arcs take colors 1..m cyclically in (tail, head) order.
    struct ReductionOutput
    {
        ColoredDigraph d_prime;
        std::vector<Vertex> new_vertices;
        std::vector<Vertex> mapping;   ///< vertex of D -> vertex of D'
        PathMode mode = PathMode::ProperlyColored;
    };

    /// Vertices of D are labeled v0.., new vertices x0... Throws EmptyDigraph and BadParameter (m = 0).
    auto reduction_kernel_to_pathkernel(const PlainDigraph & d, Color m, PathMode mode = PathMode::ProperlyColored)
        -> ReductionOutput;
}
