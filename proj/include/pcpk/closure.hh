#pragma once

#include <pcpk/colored_digraph.hh>
#include <pcpk/pc_paths.hh>
#include <pcpk/plain_digraph.hh>

#include <optional>
#include <string>
#include <vector>

namespace pcpk
{
    /// The closure: an arc (u, v) for every PC (u, v)-path of the source digraph, each with
    /// one witness path.
    class ClosureDigraph
    {
        private:
            PlainDigraph _graph;
            std::vector<std::optional<PcPath>> _witness;
            PathMode _mode = PathMode::ProperlyColored;

        public:
            ClosureDigraph(PlainDigraph graph, std::vector<std::optional<PcPath>> witness, PathMode mode);

            auto graph() const -> const PlainDigraph & { return _graph; }
            auto mode() const -> PathMode { return _mode; }
            auto has_arc(Vertex u, Vertex v) const -> bool { return _graph.has_arc(u, v); }
            auto witness(Vertex u, Vertex v) const -> const PcPath & { return *_witness[u * _graph.size() + v]; }
    };

    struct ClosureOptions
    {
        std::uint64_t budget = default_search_budget;   ///< per pair query
        unsigned jobs = 1;
    };

    /// Runs one search per ordered pair; with jobs > 1 the targets are split across threads,
    /// the result is identical to the sequential one.
    auto closure(const ColoredDigraph & d, PathMode mode = PathMode::ProperlyColored,
            const ClosureOptions & options = {}) -> ClosureDigraph;

    /// The closure as a colored digraph with every arc colored 1 and the source labels.
    auto closure_as_colored(const ColoredDigraph & d, const ClosureDigraph & c) -> ColoredDigraph;

    /// Sidecar witness file: one `w <u> <v> : <v0> <v1> ... <vk>` line per closure arc.
    auto closure_witness_text(const ColoredDigraph & d, const ClosureDigraph & c) -> std::string;
}
