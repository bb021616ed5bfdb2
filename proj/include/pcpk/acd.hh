#pragma once

#include <pcpk/colored_digraph.hh>

#include <array>
#include <string>
#include <string_view>

namespace pcpk
{
    /// Fixed DOT palette; color c is drawn with dot_palette[(c - 1) % size].
    inline constexpr std::array<std::string_view, 10> dot_palette = {
        "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
        "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"
    };

    /// Parses the line-oriented ACD format:
    ///
    ///     acd 1
    ///     v <label>
    ///     a <src-label> <dst-label> <color>
    ///
    /// '#' starts a comment. Vertex indices follow declaration order.
    auto parse_acd(std::string_view text) -> ColoredDigraph;

    /// Canonical form: vertices in natural label order ("v2" before "v10"), arcs sorted by
    /// that vertex order.
    auto serialize_acd(const ColoredDigraph & d) -> std::string;

    auto to_dot(const ColoredDigraph & d, std::string_view name = "D") -> std::string;

    /// Natural ordering of labels: runs of digits compare numerically.
    auto natural_less(std::string_view a, std::string_view b) -> bool;
}
