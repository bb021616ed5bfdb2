#include "helpers.hh"
#include "oracles.hh"

#include <pcpk/generators.hh>
#include <pcpk/graph_algorithms.hh>
#include <pcpk/kernel.hh>
#include <pcpk/rng.hh>

#include <algorithm>

using namespace test;

namespace
{
    auto random_plain(std::size_t n, double p, std::uint64_t seed) -> PlainDigraph
    {
        return PlainDigraph::underlying(random_digraph(n, p, 1, seed));
    }

    /// Arcs only between even and odd vertices: the underlying graph is bipartite.
    auto random_bipartite_plain(std::size_t n, double p, std::uint64_t seed) -> PlainDigraph
    {
        Rng rng(seed);
        std::vector<VertexPair> arcs;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = 0 ; v < n ; ++v)
                if ((u + v) % 2 == 1 && bernoulli(rng, p))
                    arcs.emplace_back(u, v);
        return PlainDigraph::from_arcs(n, arcs);
    }

    auto masks_of(const std::vector<KernelSet> & ks) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> result;
        for (auto & k : ks)
            result.push_back(oracle::mask_of(k.members));
        std::sort(result.begin(), result.end());
        return result;
    }
}

TEST_CASE("is_kernel")
{
    auto c3 = directed_cycle(3);
    for (Vertex v = 0 ; v < 3 ; ++v)
        CHECK_FALSE(is_kernel(c3, std::vector<Vertex>{ v }));
    auto c4 = directed_cycle(4);
    CHECK(is_kernel(c4, std::vector<Vertex>{ 0, 2 }));
    CHECK_FALSE(is_kernel(c4, std::vector<Vertex>{ 0, 1 }));
    CHECK_FALSE(is_kernel(c4, std::vector<Vertex>{}));
    CHECK(is_kernel(PlainDigraph::from_arcs(0, {}), std::vector<Vertex>{}));
    CHECK(error_code_of([&] { is_kernel(c4, std::vector<Vertex>{ 7 }); }) == Errc::VertexOutOfRange);

    auto k = certify_kernel(c4, std::vector<Vertex>{ 2, 0 });
    REQUIRE(k.has_value());
    CHECK(k->members == std::vector<Vertex>{ 0, 2 });
    CHECK(k->absorption == std::vector<VertexPair>{ { 1, 2 }, { 3, 0 } });
}

TEST_CASE("find_kernel and all_kernels on small cases")
{
    auto path = plain(3, { { 0, 1 }, { 1, 2 } });
    auto k = find_kernel(path);
    REQUIRE(k.has_value());
    CHECK(k->members == std::vector<Vertex>{ 0, 2 });
    CHECK(all_kernels(path).size() == 1);

    CHECK_FALSE(find_kernel(directed_cycle(3)).has_value());
    CHECK(all_kernels(directed_cycle(3)).empty());

    auto four = all_kernels(directed_cycle(4));
    REQUIRE(four.size() == 2);
    CHECK(four[0].members == std::vector<Vertex>{ 0, 2 });
    CHECK(four[1].members == std::vector<Vertex>{ 1, 3 });

    auto empty = find_kernel(PlainDigraph::from_arcs(0, {}));
    REQUIRE(empty.has_value());
    CHECK(empty->members.empty());

    std::vector<VertexPair> none;
    CHECK(error_code_of([&] { all_kernels(PlainDigraph::from_arcs(25, none)); }) == Errc::TooLarge);
    CHECK(all_kernels(PlainDigraph::from_arcs(3, none)).size() == 1);
}

TEST_CASE("kernel_of_acyclic")
{
    auto single = PlainDigraph::from_arcs(1, {});
    CHECK(kernel_of_acyclic(single).members == std::vector<Vertex>{ 0 });
    CHECK(kernel_of_acyclic(plain(3, { { 0, 1 }, { 1, 2 } })).members == std::vector<Vertex>{ 0, 2 });
    auto star = plain(4, { { 0, 1 }, { 0, 2 }, { 0, 3 } });
    CHECK(kernel_of_acyclic(star).members == std::vector<Vertex>{ 1, 2, 3 });
    CHECK(find_kernel(star)->members == std::vector<Vertex>{ 1, 2, 3 });
    CHECK(error_code_of([] { kernel_of_acyclic(directed_cycle(4)); }) == Errc::NotAcyclic);
}

TEST_CASE("precondition checks")
{
    auto pair = plain(2, { { 0, 1 }, { 1, 0 } });
    auto r = precondition_checks(pair);
    CHECK(r.every_cycle_has_symmetrical_arc);
    CHECK_FALSE(r.has_odd_cycle);
    CHECK(r.has_even_cycle);

    auto c3 = precondition_checks(directed_cycle(3));
    CHECK(c3.has_odd_cycle);
    CHECK_FALSE(c3.has_even_cycle);
    CHECK_FALSE(c3.every_cycle_has_symmetrical_arc);
    CHECK_FALSE(c3.every_odd_cycle_has_crossing_consecutive);
    CHECK_FALSE(c3.every_odd_cycle_has_two_chords_adjacent_heads);

    // A 5-cycle with chords 0->2 and 1->3: its only odd cycle has two crossing consecutive
    // arcs, and the chord heads 2 and 3 are adjacent.
    auto chorded = plain(5, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 0 }, { 0, 2 }, { 1, 3 } });
    auto rc = precondition_checks(chorded);
    CHECK(rc.has_odd_cycle);
    CHECK(rc.has_even_cycle);
    CHECK(rc.every_odd_cycle_has_crossing_consecutive);
    CHECK(rc.every_odd_cycle_has_two_chords_adjacent_heads);

    auto acyclic = precondition_checks(plain(3, { { 0, 1 }, { 1, 2 }, { 0, 2 } }));
    CHECK_FALSE(acyclic.has_odd_cycle);
    CHECK_FALSE(acyclic.has_even_cycle);
    CHECK(acyclic.every_cycle_has_symmetrical_arc);
    CHECK(acyclic.every_odd_cycle_has_crossing_consecutive);

    CHECK(error_code_of([] {
        std::vector<VertexPair> arcs;
        for (Vertex u = 0 ; u < 9 ; ++u)
            for (Vertex v = 0 ; v < 9 ; ++v)
                if (u != v)
                    arcs.emplace_back(u, v);
        precondition_checks(PlainDigraph::from_arcs(9, arcs), 1000);
    }) == Errc::BudgetExceeded);
}

TEST_CASE("property: odd and even cycle detection agree with cycle enumeration")
{
    for (std::uint64_t seed = 0 ; seed < 300 ; ++seed) {
        auto d = random_digraph(6, 0.25, 1, seed);
        bool odd = false, even = false;
        for (auto & c : oracle::cycles(d))
            (c.size() % 2 ? odd : even) = true;
        auto r = precondition_checks(PlainDigraph::underlying(d));
        CHECK(r.has_odd_cycle == odd);
        CHECK(r.has_even_cycle == even);
        CHECK(has_odd_cycle(PlainDigraph::underlying(d)) == odd);

        bool symmetric = true;
        for (auto & c : oracle::cycles(d)) {
            bool found = false;
            for (std::size_t i = 0 ; i < c.size() ; ++i)
                found = found || d.has_arc(c[(i + 1) % c.size()], c[i]);
            symmetric = symmetric && found;
        }
        CHECK(r.every_cycle_has_symmetrical_arc == symmetric);
    }
}

TEST_CASE("property: find_kernel agrees with 2^n subset enumeration (n <= 12)")
{
    for (std::uint64_t seed = 0 ; seed < 400 ; ++seed) {
        auto n = 1 + seed % 12;
        auto h = random_plain(n, 0.15 + 0.05 * double(seed % 6), seed);
        auto expected = oracle::kernels(oracle::arc_matrix(h));
        auto k = find_kernel(h);
        CHECK(k.has_value() == ! expected.empty());
        if (k) {
            CHECK(is_kernel(h, k->members));
            CHECK(std::find(expected.begin(), expected.end(), oracle::mask_of(k->members)) != expected.end());
            CHECK(k->absorption.size() == n - k->members.size());
        }
        if (n <= 9)
            CHECK(masks_of(all_kernels(h)) == expected);
    }
}

TEST_CASE("property: existence does not depend on branch order")
{
    Rng rng(5);
    for (std::uint64_t seed = 0 ; seed < 200 ; ++seed) {
        auto h = random_plain(8, 0.25, seed);
        KernelSearchOptions shuffled;
        shuffled.branch_order.resize(8);
        for (Vertex v = 0 ; v < 8 ; ++v)
            shuffled.branch_order[v] = v;
        std::shuffle(shuffled.branch_order.begin(), shuffled.branch_order.end(), rng);
        auto a = find_kernel(h);
        auto b = find_kernel(h, shuffled);
        CHECK(a.has_value() == b.has_value());
        if (b)
            CHECK(is_kernel(h, b->members));
    }
}

TEST_CASE("property: kernel theorems on sampled digraphs")
{
    std::size_t acyclic = 0, bipartite = 0, no_even = 0, symmetric = 0;
    for (std::uint64_t seed = 0 ; seed < 600 ; ++seed) {
        auto h = random_plain(7, 0.1 + 0.05 * double(seed % 5), seed);
        auto kernels = all_kernels(h);
        auto r = precondition_checks(h);
        if (is_acyclic(h.out_adjacency())) {
            ++acyclic;
            REQUIRE(kernels.size() == 1);
            CHECK(kernels[0].members == kernel_of_acyclic(h).members);
        }
        if (! r.has_even_cycle) {
            ++no_even;
            CHECK(kernels.size() <= 1);
        }
        if (r.every_cycle_has_symmetrical_arc) {
            ++symmetric;
            CHECK(find_kernel(h).has_value());
        }
        if (! r.has_odd_cycle)
            CHECK(find_kernel(h).has_value());

        auto b = random_bipartite_plain(8, 0.35, seed);
        if (! has_odd_cycle(b)) {
            ++bipartite;
            CHECK(find_kernel(b).has_value());
        }
    }
    CHECK(acyclic > 50);
    CHECK(bipartite == 600);
    CHECK(no_even > 50);
    CHECK(symmetric > 50);
}

TEST_CASE("kernel text format")
{
    auto k = find_kernel(plain(3, { { 0, 1 }, { 1, 2 } }));
    CHECK(format_kernel(*k, { "a", "b", "c" }) == "K: {a,c}\nabs b -> c\n");
}
