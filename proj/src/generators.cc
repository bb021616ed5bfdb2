#include <pcpk/generators.hh>
#include <pcpk/error.hh>
#include <pcpk/rng.hh>

#include <algorithm>
#include <numeric>

using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace pcpk
{
    namespace
    {
        auto check_colors(Color m) -> void
        {
            if (m == 0)
                throw Error(Errc::BadParameter, "color count must be at least 1");
        }

        auto draw_color(Rng & rng, Color m) -> std::int64_t
        {
            return std::int64_t(uniform_below(rng, m)) + 1;
        }
    }

    auto random_digraph(std::size_t n, double p, Color m, std::uint64_t seed) -> ColoredDigraph
    {
        check_colors(m);
        if (! (p >= 0.0 && p <= 1.0))
            throw Error(Errc::BadParameter, "arc probability must lie in [0, 1]");

        Rng rng(seed);
        vector<RawArc> arcs;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = 0 ; v < n ; ++v)
                if (u != v && bernoulli(rng, p))
                    arcs.push_back(RawArc{ u, v, draw_color(rng, m) });
        return ColoredDigraph::validate(n, arcs);
    }

    auto random_tournament(std::size_t n, Color m, std::uint64_t seed) -> ColoredDigraph
    {
        check_colors(m);
        Rng rng(seed);
        vector<RawArc> arcs;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v) {
                auto color = draw_color(rng, m);
                if (bernoulli(rng, 0.5))
                    arcs.push_back(RawArc{ u, v, color });
                else
                    arcs.push_back(RawArc{ v, u, color });
            }
        return ColoredDigraph::validate(n, arcs);
    }

    auto random_bipartite_tournament(std::size_t nx, std::size_t ny, Color m, std::uint64_t seed) -> ColoredDigraph
    {
        check_colors(m);
        if (nx == 0 || ny == 0)
            throw Error(Errc::BadParameter, "both sides of a bipartite tournament must be non-empty");

        vector<string> labels;
        for (std::size_t i = 1 ; i <= nx ; ++i)
            labels.push_back("x" + to_string(i));
        for (std::size_t i = 1 ; i <= ny ; ++i)
            labels.push_back("y" + to_string(i));

        Rng rng(seed);
        vector<RawArc> arcs;
        for (Vertex x = 0 ; x < nx ; ++x)
            for (Vertex y = nx ; y < nx + ny ; ++y) {
                auto color = draw_color(rng, m);
                if (bernoulli(rng, 0.5))
                    arcs.push_back(RawArc{ x, y, color });
                else
                    arcs.push_back(RawArc{ y, x, color });
            }
        return ColoredDigraph::validate(nx + ny, arcs, labels);
    }

    auto random_semicomplete(std::size_t n, Color m, std::uint64_t seed) -> ColoredDigraph
    {
        check_colors(m);
        Rng rng(seed);
        vector<RawArc> arcs;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v) {
                auto shape = uniform_below(rng, 3);
                if (shape != 1)
                    arcs.push_back(RawArc{ u, v, draw_color(rng, m) });
                if (shape != 0)
                    arcs.push_back(RawArc{ v, u, draw_color(rng, m) });
            }
        return ColoredDigraph::validate(n, arcs);
    }

    auto random_unicyclic(std::size_t n, double p, Color m, std::uint64_t seed) -> ColoredDigraph
    {
        if (m < 2)
            throw Error(Errc::BadParameter, "a properly colored cycle needs at least 2 colors");
        if (n < 2)
            throw Error(Errc::BadParameter, "a unicyclic digraph needs at least 2 vertices");
        if (! (p >= 0.0 && p <= 1.0))
            throw Error(Errc::BadParameter, "arc probability must lie in [0, 1]");

        Rng rng(seed);
        std::size_t length;
        do
            length = uniform_in(rng, 2, n);
        while (m == 2 && length % 2 == 1);

        // Proper coloring of the cycle, wrap-around included.
        vector<std::int64_t> colors(length);
        for (;;) {
            for (auto & c : colors)
                c = draw_color(rng, m);
            bool proper = true;
            for (std::size_t i = 0 ; i < length ; ++i)
                if (colors[i] == colors[(i + 1) % length])
                    proper = false;
            if (proper)
                break;
        }

        vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = n ; i > 1 ; --i)
            std::swap(perm[i - 1], perm[uniform_below(rng, i)]);

        vector<RawArc> arcs;
        vector<Vertex> cycle(perm.begin(), perm.begin() + length);
        for (std::size_t i = 0 ; i < length ; ++i)
            arcs.push_back(RawArc{ cycle[i], cycle[(i + 1) % length], colors[i] });

        // Slot 0 is the cycle, slots 1.. are singletons; the cycle sits at a random position.
        std::size_t singles = n - length;
        auto cycle_slot = uniform_below(rng, singles + 1);
        vector<vector<Vertex>> slots;
        std::size_t next_single = length;
        for (std::size_t s = 0 ; s <= singles ; ++s)
            if (s == cycle_slot)
                slots.push_back(cycle);
            else
                slots.push_back({ perm[next_single++] });

        for (std::size_t a = 0 ; a < slots.size() ; ++a)
            for (std::size_t b = a + 1 ; b < slots.size() ; ++b)
                for (auto u : slots[a])
                    for (auto v : slots[b])
                        if (bernoulli(rng, p / double(std::max(slots[a].size(), slots[b].size()))))
                            arcs.push_back(RawArc{ u, v, draw_color(rng, m) });

        return ColoredDigraph::validate(n, arcs);
    }

    auto colored_cycle(span<const std::int64_t> colors) -> ColoredDigraph
    {
        auto n = colors.size();
        if (n < 2)
            throw Error(Errc::BadParameter, "a cycle needs at least 2 vertices");
        vector<RawArc> arcs;
        for (Vertex i = 0 ; i < n ; ++i)
            arcs.push_back(RawArc{ i, (i + 1) % n, colors[i] });
        return ColoredDigraph::validate(n, arcs);
    }

    auto parse_generator_kind(const string & text) -> GeneratorKind
    {
        if (text == "random-digraph") return GeneratorKind::RandomDigraph;
        if (text == "random-tournament") return GeneratorKind::RandomTournament;
        if (text == "random-bipartite-tournament") return GeneratorKind::RandomBipartiteTournament;
        if (text == "random-semicomplete") return GeneratorKind::RandomSemicomplete;
        if (text == "random-unicyclic") return GeneratorKind::RandomUnicyclic;
        throw Error(Errc::BadParameter, "unknown generator kind '" + text + "'");
    }

    auto generator_kind_name(GeneratorKind kind) -> string
    {
        switch (kind) {
            case GeneratorKind::RandomDigraph: return "random-digraph";
            case GeneratorKind::RandomTournament: return "random-tournament";
            case GeneratorKind::RandomBipartiteTournament: return "random-bipartite-tournament";
            case GeneratorKind::RandomSemicomplete: return "random-semicomplete";
            case GeneratorKind::RandomUnicyclic: return "random-unicyclic";
        }
        return "unknown";
    }

    auto generate(GeneratorKind kind, const GeneratorParams & params, std::uint64_t seed) -> ColoredDigraph
    {
        switch (kind) {
            case GeneratorKind::RandomDigraph:
                return random_digraph(params.n, params.arc_probability, params.m, seed);
            case GeneratorKind::RandomTournament:
                return random_tournament(params.n, params.m, seed);
            case GeneratorKind::RandomBipartiteTournament: {
                auto nx = params.nx ? params.nx : params.n / 2;
                auto ny = params.ny ? params.ny : params.n - nx;
                return random_bipartite_tournament(nx, ny, params.m, seed);
            }
            case GeneratorKind::RandomSemicomplete:
                return random_semicomplete(params.n, params.m, seed);
            case GeneratorKind::RandomUnicyclic:
                return random_unicyclic(params.n, params.arc_probability, params.m, seed);
        }
        throw Error(Errc::BadParameter, "unknown generator kind");
    }
}
