#pragma once

#include <pcpk/colored_digraph.hh>
#include <pcpk/graph_algorithms.hh>

#include <span>
#include <utility>
#include <vector>

namespace pcpk
{
    using VertexPair = std::pair<Vertex, Vertex>;

    /// Simple uncolored digraph.
    class PlainDigraph
    {
        private:
            std::size_t _n = 0;
            std::vector<char> _matrix;
            Adjacency _out, _in;

        public:
            PlainDigraph() = default;

            /// Throws LoopArc, DuplicateArc or VertexOutOfRange.
            static auto from_arcs(std::size_t n, std::span<const VertexPair> arcs) -> PlainDigraph;

            /// Forgets the colors.
            static auto underlying(const ColoredDigraph & d) -> PlainDigraph;

            auto size() const noexcept -> std::size_t { return _n; }
            auto has_arc(Vertex u, Vertex v) const -> bool { return _matrix[u * _n + v]; }
            auto adjacent(Vertex u, Vertex v) const -> bool { return has_arc(u, v) || has_arc(v, u); }
            auto out(Vertex v) const -> const std::vector<Vertex> & { return _out[v]; }
            auto in(Vertex v) const -> const std::vector<Vertex> & { return _in[v]; }
            auto out_adjacency() const -> const Adjacency & { return _out; }
            auto arc_count() const -> std::size_t;
            auto arcs() const -> std::vector<VertexPair>;

            auto operator==(const PlainDigraph & other) const -> bool { return _n == other._n && _matrix == other._matrix; }
    };
}
