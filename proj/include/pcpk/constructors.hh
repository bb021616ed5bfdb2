#pragma once

#include <pcpk/classify.hh>
#include <pcpk/pcp_kernel.hh>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pcpk
{
    // Constructive PCP-kernels for special classes. Every returned certificate has been
    // verified; when a constructed set fails verification the exact solver is used instead
    // and the certificate says so (fallback_used plus a trail entry).

    /// None iff the cycle is monochromatic and odd. A monochromatic even cycle gives every
    /// second vertex from the start, a properly colored cycle gives its start vertex; otherwise
    /// every maximal monochromatic run of length >= 2 ending at e contributes e-2, e-4, ...
    /// down to the run start. Throws NotACycle.
    auto pcp_kernel_of_cycle(const ColoredDigraph & c, const SolveOptions & options = {})
        -> std::optional<PcpKernelCertificate>;

    /// Strong components in topological order. The seed is the least cycle vertex when the
    /// cycle component comes last, all sinks otherwise; components are then scanned from the
    /// back and a singleton joins when it has no PC path into the set. At the cycle component
    /// the least cycle vertex that cannot reach the set joins, if any.
    /// Throws NotUnicyclic and CycleNotProperlyColored.
    auto pcp_kernel_of_unicyclic(const ColoredDigraph & d, const SolveOptions & options = {}) -> PcpKernelCertificate;

    /// Least vertex reached from every other vertex by a PC path of length at most 3.
    /// Throws NotSemiComplete.
    auto good_vertex_semicomplete(const ColoredDigraph & d, const SolveOptions & options = {}) -> std::optional<Vertex>;

    /// The good vertex as a singleton kernel. Without a good vertex every singleton is tried,
    /// which is exhaustive because members of a kernel in a semi-complete digraph are adjacent.
    auto pcp_kernel_semicomplete(const ColoredDigraph & d, const SolveOptions & options = {})
        -> std::optional<PcpKernelCertificate>;

    /// Intermediate sets of the bipartite case analysis, in original vertex indices.
    struct BipartiteTrace
    {
        std::vector<std::string> steps;
        std::map<std::string, std::vector<Vertex>> sets;
        std::optional<Color> alpha;
        std::optional<Color> beta;
        std::string outcome;
    };

    /// One color: X if every vertex of Y has an out-neighbor in X, else Y. A side of size one:
    /// the digraph is acyclic. A side of size two: sources of Y are stripped and contractible
    /// pairs removed, then the case analysis on Y0 (vertices dominated by both x's) runs.
    /// Larger sides need every 4- and 6-cycle properly colored and use the exact solver.
    /// Throws NotBipartiteTournament and NoApplicableCondition.
    auto pcp_kernel_bipartite(const ColoredDigraph & d, const BipartitePartition & partition,
            const SolveOptions & options = {}, BipartiteTrace * trace = nullptr) -> std::optional<PcpKernelCertificate>;
}
