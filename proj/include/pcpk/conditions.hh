#pragma once

#include <pcpk/colored_digraph.hh>
#include <pcpk/graph_algorithms.hh>

#include <set>
#include <vector>

namespace pcpk
{
    /// Outcome of a cycle condition; `witness` is a violating cycle (from its least vertex)
    /// when the condition fails, empty otherwise.
    struct ConditionResult
    {
        bool holds = true;
        std::vector<Vertex> witness;
    };

    /// Every directed cycle, 2-cycles included, is properly colored. Polynomial: a cycle with
    /// a same-colored consecutive pair u->v->w exists iff w reaches u while avoiding v.
    auto all_cycles_properly_colored(const ColoredDigraph & d) -> ConditionResult;

    /// Every cycle whose length is in `lengths` is properly colored, wrap-around pair included.
    /// Throws BadParameter for lengths below 2, BudgetExceeded from the enumeration.
    auto k_cycles_properly_colored(const ColoredDigraph & d, const std::set<std::size_t> & lengths,
            std::uint64_t cycle_budget = default_cycle_budget) -> ConditionResult;

    /// `holds` is true iff some directed 3-cycle is monochromatic; the witness is that triangle.
    auto has_monochromatic_triangle(const ColoredDigraph & d) -> ConditionResult;

    auto cycle_is_properly_colored(const ColoredDigraph & d, std::span<const Vertex> cycle) -> bool;
}
