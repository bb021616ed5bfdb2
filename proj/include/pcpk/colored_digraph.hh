#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pcpk
{
    using Vertex = std::size_t;
    using Color = std::uint32_t;

    /// Color value 0 never appears on an arc; it marks "no arc" in the color matrix and
    /// "no incoming color yet" in path searches.
    inline constexpr Color no_color = 0;

    struct RawArc
    {
        Vertex from;
        Vertex to;
        std::int64_t color;
    };

    struct Arc
    {
        Vertex from;
        Vertex to;
        Color color;

        auto operator<=>(const Arc &) const = default;
    };

    struct OutArc
    {
        Vertex head;
        Color color;
    };

    struct InArc
    {
        Vertex tail;
        Color color;
        std::size_t id; ///< position of the same arc in the global out-arc order
    };

    enum class PathMode
    {
        ProperlyColored,
        Rainbow
    };

    auto path_mode_name(PathMode mode) -> std::string;
    auto parse_path_mode(const std::string & text) -> PathMode;

    /// Simple arc-colored digraph. Immutable once built; colors are compacted to 1..=m
    /// with every color in use. Out-arcs of each vertex are sorted by head.
    class ColoredDigraph
    {
        private:
            std::size_t _n = 0;
            std::vector<std::string> _labels;
            std::vector<Color> _matrix;
            std::vector<std::size_t> _out_offsets;
            std::vector<OutArc> _out;
            std::vector<std::size_t> _in_offsets;
            std::vector<InArc> _in;
            Color _colors = 0;

        public:
            ColoredDigraph() = default;

            /// Checks loops, duplicates, vertex range and color positivity, then compacts colors
            /// (ascending order of the raw values). Missing labels default to "v<index>".
            static auto validate(std::size_t n, std::span<const RawArc> arcs,
                    std::vector<std::string> labels = {}) -> ColoredDigraph;

            auto size() const noexcept -> std::size_t { return _n; }
            auto arc_count() const noexcept -> std::size_t { return _out.size(); }
            auto color_count() const noexcept -> Color { return _colors; }

            auto color(Vertex u, Vertex v) const -> Color { return _matrix[u * _n + v]; }
            auto has_arc(Vertex u, Vertex v) const -> bool { return _matrix[u * _n + v] != no_color; }
            auto adjacent(Vertex u, Vertex v) const -> bool { return has_arc(u, v) || has_arc(v, u); }

            auto out_arcs(Vertex v) const -> std::span<const OutArc>
            {
                return { _out.data() + _out_offsets[v], _out.data() + _out_offsets[v + 1] };
            }

            auto in_arcs(Vertex v) const -> std::span<const InArc>
            {
                return { _in.data() + _in_offsets[v], _in.data() + _in_offsets[v + 1] };
            }

            auto out_arc_id(Vertex v, std::size_t position) const -> std::size_t { return _out_offsets[v] + position; }
            auto out_degree(Vertex v) const -> std::size_t { return _out_offsets[v + 1] - _out_offsets[v]; }
            auto in_degree(Vertex v) const -> std::size_t { return _in_offsets[v + 1] - _in_offsets[v]; }

            auto label(Vertex v) const -> const std::string & { return _labels[v]; }
            auto labels() const -> const std::vector<std::string> & { return _labels; }
            auto find_label(const std::string & text) const -> std::optional<Vertex>;

            /// All arcs in (from, to) order.
            auto arcs() const -> std::vector<Arc>;

            /// Sub-digraph induced by `keep` (in the given order), labels carried over.
            auto induced(std::span<const Vertex> keep) const -> ColoredDigraph;

            auto operator==(const ColoredDigraph & other) const -> bool
            {
                return _n == other._n && _labels == other._labels && _matrix == other._matrix;
            }
    };

    auto default_label(Vertex v) -> std::string;
}
