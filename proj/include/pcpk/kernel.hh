#pragma once

#include <pcpk/graph_algorithms.hh>
#include <pcpk/plain_digraph.hh>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pcpk
{
    /// A kernel of a plain digraph: members sorted ascending, plus one (outsider, member) arc
    /// per outsider. Independence is checked exhaustively when the set is built.
    struct KernelSet
    {
        std::vector<Vertex> members;
        std::vector<VertexPair> absorption;

        auto operator==(const KernelSet &) const -> bool = default;
    };

    /// Throws VertexOutOfRange.
    auto is_kernel(const PlainDigraph & h, std::span<const Vertex> s) -> bool;

    /// Checks `s` and attaches absorption witnesses (least absorbing member); nullopt if not a kernel.
    auto certify_kernel(const PlainDigraph & h, std::span<const Vertex> s) -> std::optional<KernelSet>;

    struct KernelSearchOptions
    {
        /// Branching order; empty means descending out-degree, ties by index.
        std::vector<Vertex> branch_order;
    };

    /// Branch and bound over include/exclude decisions. Inclusion forces every neighbor out;
    /// an excluded vertex whose out-neighbors are all excluded fails the branch, and one with a
    /// single open out-neighbor forces it in. Inclusion is tried first, so the kernel returned
    /// is the first in the deterministic branch order.
    auto find_kernel(const PlainDigraph & h, const KernelSearchOptions & options = {}) -> std::optional<KernelSet>;

    inline constexpr std::size_t all_kernels_limit = 24;

    /// Every kernel, sorted by member list. Throws TooLarge beyond all_kernels_limit vertices.
    auto all_kernels(const PlainDigraph & h) -> std::vector<KernelSet>;

    /// Repeatedly takes every current sink and deletes it with its in-neighbors. Throws NotAcyclic.
    auto kernel_of_acyclic(const PlainDigraph & h) -> KernelSet;

    struct PreconditionReport
    {
        bool has_odd_cycle = false;
        bool has_even_cycle = false;
        bool every_cycle_has_symmetrical_arc = false;
        bool every_odd_cycle_has_crossing_consecutive = false;
        bool every_odd_cycle_has_two_chords_adjacent_heads = false;
    };

    /// Odd cycles: a strong component whose underlying graph is not bipartite. Symmetrical arcs:
    /// acyclicity of the non-symmetrical arcs. The rest by cycle enumeration under `cycle_budget`.
    auto precondition_checks(const PlainDigraph & h, std::uint64_t cycle_budget = default_cycle_budget) -> PreconditionReport;

    auto has_odd_cycle(const PlainDigraph & h) -> bool;
    auto every_cycle_has_symmetrical_arc(const PlainDigraph & h) -> bool;

    /// `K: {a,b}` followed by one `abs <v> -> <s>` line per outsider.
    auto format_kernel(const KernelSet & k, const std::vector<std::string> & labels) -> std::string;
}
