#pragma once

#include <pcpk/colored_digraph.hh>
#include <pcpk/error.hh>
#include <pcpk/plain_digraph.hh>

#include <doctest.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace test
{
    using namespace pcpk;

    inline auto digraph(std::size_t n, std::initializer_list<RawArc> arcs) -> ColoredDigraph
    {
        std::vector<RawArc> raw(arcs);
        return ColoredDigraph::validate(n, raw);
    }

    inline auto plain(std::size_t n, std::initializer_list<VertexPair> arcs) -> PlainDigraph
    {
        std::vector<VertexPair> list(arcs);
        return PlainDigraph::from_arcs(n, list);
    }

    inline auto directed_cycle(std::size_t n) -> PlainDigraph
    {
        std::vector<VertexPair> arcs;
        for (Vertex v = 0 ; v < n ; ++v)
            arcs.emplace_back(v, (v + 1) % n);
        return PlainDigraph::from_arcs(n, arcs);
    }

    inline auto vertex(const ColoredDigraph & d, const std::string & label) -> Vertex
    {
        auto v = d.find_label(label);
        REQUIRE(v.has_value());
        return *v;
    }

    inline auto vertices(const ColoredDigraph & d, std::initializer_list<const char *> labels) -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        for (auto l : labels)
            result.push_back(vertex(d, l));
        return result;
    }

    template <typename F>
    auto error_code_of(F && f) -> std::optional<Errc>
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.code();
        }
        return std::nullopt;
    }
}
