#pragma once

// Deliberately naive reference implementations used to cross-check the library.
// They read only the color matrix of a digraph and share no code with the solvers.

#include <pcpk/colored_digraph.hh>
#include <pcpk/plain_digraph.hh>

#include <cstdint>
#include <limits>
#include <vector>

namespace oracle
{
    using pcpk::ColoredDigraph;
    using pcpk::PathMode;
    using pcpk::PlainDigraph;
    using pcpk::Vertex;

    using Matrix = std::vector<std::vector<char>>;

    inline constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

    /// Tries every simple path from u with the path condition checked at the end.
    auto pc_path(const ColoredDigraph & d, Vertex u, Vertex v, PathMode mode, std::size_t max_len = unbounded) -> bool;

    /// Walk-level reachability by brute-force closure over (vertex, last color) states.
    auto pc_walk(const ColoredDigraph & d, Vertex u, Vertex v) -> bool;

    auto closure(const ColoredDigraph & d, PathMode mode) -> Matrix;

    /// Plain reachability closure (Floyd-Warshall), diagonal cleared.
    auto reachability(const Matrix & arcs) -> Matrix;

    auto arc_matrix(const ColoredDigraph & d) -> Matrix;
    auto arc_matrix(const PlainDigraph & h) -> Matrix;

    auto is_kernel(const Matrix & arcs, std::uint64_t mask) -> bool;

    /// Every kernel as a bit mask, by 2^n subset enumeration.
    auto kernels(const Matrix & arcs) -> std::vector<std::uint64_t>;

    /// Every PCP-kernel as a bit mask, from the naive closure.
    auto pcp_kernels(const ColoredDigraph & d, PathMode mode) -> std::vector<std::uint64_t>;

    /// Every directed cycle of length >= 2, starting at its least vertex.
    auto cycles(const ColoredDigraph & d) -> std::vector<std::vector<Vertex>>;

    auto cycle_properly_colored(const ColoredDigraph & d, const std::vector<Vertex> & cycle) -> bool;

    auto all_cycles_pc(const ColoredDigraph & d) -> bool;

    auto members(std::uint64_t mask) -> std::vector<Vertex>;
    auto mask_of(const std::vector<Vertex> & vs) -> std::uint64_t;
}
