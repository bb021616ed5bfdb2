#pragma once

#include <pcpk/colored_digraph.hh>

#include <cstdint>
#include <span>
#include <string>

namespace pcpk
{
    // Every generator is a pure function of its arguments. Arc colors are drawn uniformly
    // from 1..=m and then compacted, so the result may use fewer than m colors.

    auto random_digraph(std::size_t n, double arc_probability, Color m, std::uint64_t seed) -> ColoredDigraph;

    auto random_tournament(std::size_t n, Color m, std::uint64_t seed) -> ColoredDigraph;

    /// X = vertices 0..nx-1 labeled x1.., Y = the rest labeled y1..
    auto random_bipartite_tournament(std::size_t nx, std::size_t ny, Color m, std::uint64_t seed) -> ColoredDigraph;

    /// Each pair gets u->v, v->u or both with equal probability.
    auto random_semicomplete(std::size_t n, Color m, std::uint64_t seed) -> ColoredDigraph;

    /// A properly colored cycle of random length (needs m >= 2, or m >= 3 for odd lengths)
    /// plus singletons placed in a random order around it; arcs only go forward in that
    /// order, so the cycle stays the only one.
    auto random_unicyclic(std::size_t n, double arc_probability, Color m, std::uint64_t seed) -> ColoredDigraph;

    /// C_n = (v0, ..., v_{n-1}, v0) with c(v_i v_{i+1}) = colors[i].
    auto colored_cycle(std::span<const std::int64_t> colors) -> ColoredDigraph;

    enum class GeneratorKind
    {
        RandomDigraph,
        RandomTournament,
        RandomBipartiteTournament,
        RandomSemicomplete,
        RandomUnicyclic
    };

    auto parse_generator_kind(const std::string & text) -> GeneratorKind;
    auto generator_kind_name(GeneratorKind kind) -> std::string;

    struct GeneratorParams
    {
        std::size_t n = 0;        ///< vertex count; for bipartite tournaments |X| = n / 2 unless nx is set
        std::size_t nx = 0;
        std::size_t ny = 0;
        Color m = 1;
        double arc_probability = 0.5;
    };

    auto generate(GeneratorKind kind, const GeneratorParams & params, std::uint64_t seed) -> ColoredDigraph;
}
