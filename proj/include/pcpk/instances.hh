#pragma once

#include <pcpk/colored_digraph.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace pcpk
{
    /// fig1-left, fig1-right, fig2-tournament, fig3-d6.
    auto named_instance(const std::string & name) -> ColoredDigraph;
    auto named_instance_names() -> std::vector<std::string>;

    /// fig1-left with its monochromatic 2-path (v6,v1,v2) stretched to length n - 4; n even, n >= 6.
    auto remark1_even(std::size_t n) -> ColoredDigraph;

    /// fig1-right with its monochromatic 2-path (u9,u1,u2) replaced by one of length n - 7; n odd,
    /// n >= 7. At n = 7 the path has length 0 and u9, u1, u2 collapse into the single vertex u2.
    auto remark1_odd(std::size_t n) -> ColoredDigraph;

    struct ConnectColoring
    {
        enum class Kind { Constant, Cyclic, Random } kind = Kind::Constant;
        Color color = 1;          ///< Constant: the color; Cyclic / Random: the palette size
        std::uint64_t seed = 0;   ///< Random only
    };

    /// Union of `base` and fig3-d6 with every arc from base to D6 added and colored per `policy`.
    /// Base vertices come first and are relabeled "b<label>" if they clash with D6 labels.
    auto remark4(const ColoredDigraph & base, const ConnectColoring & policy) -> ColoredDigraph;
}
