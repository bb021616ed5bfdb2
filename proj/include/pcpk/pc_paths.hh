#pragma once

#include <pcpk/colored_digraph.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pcpk
{
    /// A vertex-simple path together with the colors of its arcs.
    struct PcPath
    {
        std::vector<Vertex> vertices;
        std::vector<Color> colors;
        PathMode mode = PathMode::ProperlyColored;

        auto length() const -> std::size_t { return colors.size(); }
        auto source() const -> Vertex { return vertices.front(); }
        auto target() const -> Vertex { return vertices.back(); }

        /// Re-checks every invariant against `d`: simple, arcs present with the stated colors,
        /// consecutive colors distinct (pc) or all colors distinct (rainbow).
        auto valid_in(const ColoredDigraph & d) const -> bool;

        auto operator==(const PcPath &) const -> bool = default;
    };

    auto path_labels(const ColoredDigraph & d, const PcPath & path) -> std::string;

    inline constexpr std::uint64_t default_search_budget = 10'000'000;

    struct SearchOptions
    {
        std::optional<std::size_t> max_length;
        std::uint64_t budget = default_search_budget;
    };

    /// Exhaustive backtracking for PC (or rainbow) paths into a fixed target set. Construction
    /// runs a backward search over (arc, color) states giving, per arc, the fewest arcs of a PC
    /// walk that starts with it and ends in the target set; the forward search only takes arcs
    /// whose bound still fits, which is sound because a PC path is a PC walk.
    class PathSearcher
    {
        private:
            const ColoredDigraph * _d;
            PathMode _mode;
            std::vector<char> _target;
            std::vector<std::uint32_t> _remaining;

        public:
            PathSearcher(const ColoredDigraph & d, PathMode mode, std::span<const Vertex> targets);

            /// First path in ascending-head DFS order, or nullopt if none exists. Throws
            /// SameVertex if `source` is a target and BudgetExceeded past the step budget.
            auto find_from(Vertex source, const SearchOptions & options = {}) const -> std::optional<PcPath>;

            /// False only if no PC walk from `source` reaches the targets.
            auto walk_bound_allows(Vertex source) const -> bool;
    };

    auto pc_path_exists(const ColoredDigraph & d, Vertex u, Vertex v, PathMode mode = PathMode::ProperlyColored,
            const SearchOptions & options = {}) -> std::optional<PcPath>;

    auto pc_path_to_set(const ColoredDigraph & d, Vertex u, std::span<const Vertex> targets,
            PathMode mode = PathMode::ProperlyColored, const SearchOptions & options = {}) -> std::optional<PcPath>;

    /// Breadth-first search over (vertex, last color) states: is there a PC walk from u to v?
    /// Rainbow mode uses the same relaxation (a rainbow path is a PC walk).
    auto pc_walk_reachable(const ColoredDigraph & d, Vertex u, Vertex v,
            PathMode mode = PathMode::ProperlyColored) -> bool;

    /// Length of a shortest directed path, ignoring colors.
    auto distance(const ColoredDigraph & d, Vertex u, Vertex v) -> std::optional<std::size_t>;
}
