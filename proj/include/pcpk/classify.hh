#pragma once

#include <pcpk/colored_digraph.hh>

#include <optional>
#include <string>
#include <vector>

namespace pcpk
{
    struct BipartitePartition
    {
        std::vector<Vertex> x;
        std::vector<Vertex> y;

        auto operator==(const BipartitePartition &) const -> bool = default;
    };

    struct ClassTags
    {
        bool acyclic = false;
        bool unicyclic = false;
        bool is_cycle = false;
        bool tournament = false;
        bool semi_complete = false;
        bool bipartite_tournament = false;
        std::optional<BipartitePartition> partition;
        bool monochromatic = false;
        bool properly_arc_colored = false;
        bool properly_connected = false;
    };

    /// Every flag is recomputed from scratch. The properly-connected flag runs PC searches and
    /// may throw BudgetExceeded on adversarial inputs.
    auto classify(const ColoredDigraph & d) -> ClassTags;

    /// One `name: true|false` line per flag, plus the partition when there is one.
    auto format_class_tags(const ColoredDigraph & d, const ClassTags & tags) -> std::string;

    /// A unicyclic digraph has exactly one nontrivial strong component, and that component has
    /// as many arcs as vertices.
    auto is_unicyclic(const ColoredDigraph & d) -> bool;

    /// The vertices of the only cycle, in cycle order from its least vertex; nullopt unless unicyclic.
    auto unique_cycle(const ColoredDigraph & d) -> std::optional<std::vector<Vertex>>;

    auto is_cycle(const ColoredDigraph & d) -> bool;

    /// Cycle order starting at vertex 0. Throws NotACycle.
    auto cycle_order(const ColoredDigraph & d) -> std::vector<Vertex>;

    auto is_semi_complete(const ColoredDigraph & d) -> bool;
    auto is_tournament(const ColoredDigraph & d) -> bool;

    /// X is the side holding vertex 0; nullopt unless d is a bipartite tournament with both sides nonempty.
    auto bipartite_partition(const ColoredDigraph & d) -> std::optional<BipartitePartition>;

    /// Checks that `p` is a valid bipartition of the bipartite tournament d.
    auto is_bipartite_tournament(const ColoredDigraph & d, const BipartitePartition & p) -> bool;

    /// No vertex has an in-arc and an out-arc of the same color.
    auto is_properly_arc_colored(const ColoredDigraph & d) -> bool;

    /// Every ordered pair of distinct vertices is joined by a PC path.
    auto is_properly_connected(const ColoredDigraph & d) -> bool;
}
