#pragma once

#include <pcpk/colored_digraph.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace pcpk
{
    using Adjacency = std::vector<std::vector<Vertex>>;

    auto adjacency_of(const ColoredDigraph & d) -> Adjacency;

    struct Components
    {
        /// component[v] is the index of v's strong component; indices follow a topological
        /// order of the condensation (every arc goes from a lower or equal index to a higher one).
        std::vector<std::size_t> component;
        std::vector<std::vector<Vertex>> members;
    };

    auto strong_components(const Adjacency & adj) -> Components;

    auto is_acyclic(const Adjacency & adj) -> bool;

    /// Vertices reachable from `source` (source included).
    auto reachable_from(const Adjacency & adj, Vertex source) -> std::vector<char>;

    /// Default budget on the number of enumerated cycles.
    inline constexpr std::uint64_t default_cycle_budget = 1'000'000;

    /// Enumerates every directed cycle (length >= 2) of length at most `max_length` exactly once,
    /// as a vertex sequence starting at its least vertex. The visitor returns false to stop.
    /// Throws BudgetExceeded beyond `max_cycles` cycles (or a proportional number of search steps).
    auto enumerate_cycles(const Adjacency & adj, std::size_t max_length,
            const std::function<auto (std::span<const Vertex>) -> bool> & visit,
            std::uint64_t max_cycles = default_cycle_budget) -> std::uint64_t;
}
