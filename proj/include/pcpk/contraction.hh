#pragma once

#include <pcpk/colored_digraph.hh>
#include <pcpk/pc_paths.hh>
#include <pcpk/plain_digraph.hh>

#include <span>
#include <vector>

namespace pcpk
{
    /// Same in- and out-neighbors with the same colors, hence no arc between them.
    auto contractible(const ColoredDigraph & d, Vertex a, Vertex b) -> bool;

    struct Contraction
    {
        ColoredDigraph reduced;
        std::vector<Vertex> kept;          ///< reduced vertex -> original vertex
        std::vector<VertexPair> removed;   ///< (removed vertex, its twin), original indices, removal order
    };

    /// Repeatedly removes the larger vertex of the least contractible pair until none is left.
    auto contract_contractible(const ColoredDigraph & d) -> Contraction;

    /// Lifts a PCP-kernel of the reduced digraph, restoring removed vertices in reverse order:
    /// a removed vertex joins the set iff its twin is a member and it has no PC path to the twin.
    auto lift_contraction(const ColoredDigraph & d, const Contraction & c, std::span<const Vertex> reduced_members,
            PathMode mode = PathMode::ProperlyColored, const SearchOptions & options = {}) -> std::vector<Vertex>;
}
