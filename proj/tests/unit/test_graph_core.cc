#include "helpers.hh"

#include <pcpk/acd.hh>
#include <pcpk/classify.hh>
#include <pcpk/conditions.hh>
#include <pcpk/generators.hh>
#include <pcpk/instances.hh>

#include <pcpk/rng.hh>

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

using namespace test;

namespace
{
    using ColorSets = std::vector<std::vector<std::pair<std::string, std::string>>>;

    // Arc tables of the four drawn instances, one list per color.
    auto check_color_classes(const ColoredDigraph & d, const ColorSets & classes) -> void
    {
        std::size_t total = 0;
        for (std::size_t c = 0 ; c < classes.size() ; ++c)
            for (auto & [u, v] : classes[c]) {
                CHECK_MESSAGE(d.color(vertex(d, u), vertex(d, v)) == c + 1, u << "->" << v);
                ++total;
            }
        CHECK(d.arc_count() == total);
        CHECK(d.color_count() == classes.size());
    }
}

TEST_CASE("validate compacts colors and rejects malformed arcs")
{
    auto d = digraph(2, { { 0, 1, 5 } });
    CHECK(d.color_count() == 1);
    CHECK(d.color(0, 1) == 1);

    CHECK(error_code_of([] { digraph(1, { { 0, 0, 1 } }); }) == Errc::LoopArc);
    CHECK(error_code_of([] { digraph(2, { { 0, 1, 1 }, { 0, 1, 2 } }); }) == Errc::DuplicateArc);
    CHECK(error_code_of([] { digraph(2, { { 0, 1, 0 } }); }) == Errc::NonPositiveColor);
    CHECK(error_code_of([] { digraph(2, { { 0, 1, -3 } }); }) == Errc::NonPositiveColor);
    CHECK(error_code_of([] { digraph(2, { { 0, 2, 1 } }); }) == Errc::VertexOutOfRange);

    auto two = digraph(2, { { 0, 1, 1 }, { 1, 0, 2 } });
    CHECK(two.arc_count() == 2);
    CHECK(two.color_count() == 2);
    CHECK(two.color(1, 0) == 2);

    auto gaps = digraph(3, { { 0, 1, 7 }, { 1, 2, 3 }, { 2, 0, 7 } });
    CHECK(gaps.color_count() == 2);
    CHECK(gaps.color(1, 2) == 1);
    CHECK(gaps.color(0, 1) == 2);
    CHECK(gaps.color(2, 0) == 2);
}

TEST_CASE("ACD parsing, serialization and DOT export")
{
    auto d = parse_acd("acd 1\nv a\nv b\na a b 1\n");
    CHECK(d.size() == 2);
    CHECK(d.arc_count() == 1);
    CHECK(d.has_arc(vertex(d, "a"), vertex(d, "b")));

    auto commented = parse_acd("# header next\nacd 1\n\nv a   # trailing\nv b\na a b 4\n");
    CHECK(commented == d);

    CHECK(error_code_of([] { parse_acd("acd 1\nv a\nv b\na a b 0\n"); }) == Errc::SyntaxError);
    CHECK(error_code_of([] { parse_acd("acd 1\nv a\na a b 1\n"); }) == Errc::UnknownVertexLabel);
    CHECK(error_code_of([] { parse_acd("v a\n"); }) == Errc::SyntaxError);
    CHECK(error_code_of([] { parse_acd("acd 1\nv a\nv a\n"); }) == Errc::SyntaxError);
    CHECK(error_code_of([] { parse_acd("acd 1\nv a\nv b\na a b x\n"); }) == Errc::SyntaxError);
    CHECK(error_code_of([] { parse_acd("acd 1\nv a\na a a 1\n"); }) == Errc::LoopArc);
    CHECK(error_code_of([] { parse_acd("acd 1\nq\n"); }) == Errc::SyntaxError);

    try {
        parse_acd("acd 1\nv a\nv b\na a b 0\n");
    }
    catch (const Error & e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }

    auto d6 = named_instance("fig3-d6");
    auto text = serialize_acd(d6);
    CHECK(serialize_acd(parse_acd(text)) == text);
    CHECK(parse_acd(text) == d6);

    auto dot = to_dot(named_instance("fig2-tournament"));
    CHECK(dot.starts_with("digraph"));
    CHECK(dot.find("label=\"2\"") != std::string::npos);
    CHECK(dot.find(std::string("color=\"") + std::string(dot_palette[1]) + "\"") != std::string::npos);
}

TEST_CASE("canonical serialization sorts labels naturally and arcs lexicographically")
{
    auto d = parse_acd("acd 1\nv v10\nv v2\nv v1\na v10 v1 2\na v1 v2 1\na v2 v10 1\n");
    auto text = serialize_acd(d);
    CHECK(text == "acd 1\nv v1\nv v2\nv v10\na v1 v2 1\na v2 v10 1\na v10 v1 2\n");
    CHECK(natural_less("v2", "v10"));
    CHECK_FALSE(natural_less("v10", "v2"));
}

TEST_CASE("named instances match the drawings arc for arc")
{
    check_color_classes(named_instance("fig1-left"), {
        { { "v1", "v2" }, { "v2", "v3" }, { "v3", "v4" }, { "v5", "v6" }, { "v6", "v1" } },
        { { "v3", "v5" }, { "v5", "v4" } } });
    check_color_classes(named_instance("fig1-right"), {
        { { "u1", "u2" }, { "u2", "u3" }, { "u3", "u4" }, { "u5", "u6" }, { "u6", "u7" }, { "u8", "u9" }, { "u9", "u1" } },
        { { "u3", "u5" }, { "u5", "u4" } },
        { { "u6", "u8" }, { "u8", "u7" } } });
    check_color_classes(named_instance("fig2-tournament"), {
        { { "v1", "v2" }, { "v1", "v3" }, { "v1", "v4" } },
        { { "v2", "v3" }, { "v3", "v4" }, { "v4", "v2" } } });
    check_color_classes(named_instance("fig3-d6"), {
        { { "x1", "y1" }, { "y1", "x2" }, { "y2", "x1" } },
        { { "x2", "y2" }, { "y2", "x3" }, { "y3", "x2" } },
        { { "x3", "y3" }, { "y1", "x3" }, { "y3", "x1" } } });

    CHECK(named_instance("fig1-left").size() == 6);
    CHECK(named_instance("fig1-right").size() == 9);
    CHECK(named_instance("fig2-tournament").size() == 4);
    CHECK(named_instance("fig3-d6").size() == 6);
    CHECK(error_code_of([] { named_instance("fig9"); }) == Errc::UnknownInstance);
}

TEST_CASE("remark families")
{
    CHECK(serialize_acd(remark1_even(6)) == serialize_acd(named_instance("fig1-left")));
    CHECK(remark1_odd(7).size() == 7);
    CHECK(remark1_even(10).size() == 10);
    CHECK(remark1_odd(11).size() == 11);
    CHECK(error_code_of([] { remark1_even(5); }) == Errc::BadParameter);
    CHECK(error_code_of([] { remark1_even(7); }) == Errc::BadParameter);
    CHECK(error_code_of([] { remark1_odd(5); }) == Errc::BadParameter);
    CHECK(error_code_of([] { remark1_odd(8); }) == Errc::BadParameter);

    for (std::size_t n = 6 ; n <= 12 ; n += 2) {
        auto d = remark1_even(n);
        CHECK(d.arc_count() == n + 1);
        CHECK(d.color_count() == 2);
    }
    for (std::size_t n = 7 ; n <= 13 ; n += 2) {
        auto d = remark1_odd(n);
        CHECK(d.arc_count() == n + 2);
        CHECK(d.color_count() == 3);
    }

    auto single = digraph(1, {});
    auto d = remark4(single, ConnectColoring{});
    CHECK(d.size() == 7);
    CHECK(d.arc_count() == 9 + 6);
    CHECK(d.in_degree(0) == 0);
    for (Vertex v = 1 ; v < 7 ; ++v)
        CHECK(d.color(0, v) == 1);
    CHECK(d.induced(std::vector<Vertex>{ 1, 2, 3, 4, 5, 6 }) == named_instance("fig3-d6"));
    CHECK(error_code_of([] { remark4(ColoredDigraph{}, ConnectColoring{}); }) == Errc::BadParameter);
}

TEST_CASE("generators are deterministic and shaped as promised")
{
    CHECK(random_tournament(5, 2, 1) == random_tournament(5, 2, 1));
    CHECK(random_digraph(7, 0.4, 3, 9) == random_digraph(7, 0.4, 3, 9));

    for (std::uint64_t seed = 0 ; seed < 50 ; ++seed) {
        auto t = random_tournament(6, 3, seed);
        CHECK(is_tournament(t));

        auto b = random_bipartite_tournament(3, 4, 3, seed);
        for (Vertex x = 0 ; x < 3 ; ++x) {
            CHECK(b.in_degree(x) + b.out_degree(x) == 4);
            for (Vertex y = 3 ; y < 7 ; ++y)
                CHECK(b.has_arc(x, y) != b.has_arc(y, x));
        }
        auto p = bipartite_partition(b);
        REQUIRE(p.has_value());
        CHECK(is_bipartite_tournament(b, *p));

        CHECK(is_semi_complete(random_semicomplete(6, 3, seed)));
        auto u = random_unicyclic(7, 0.4, 3, seed);
        CHECK(is_unicyclic(u));
        auto cycle = unique_cycle(u);
        REQUIRE(cycle.has_value());
        CHECK(cycle_is_properly_colored(u, *cycle));
    }

    std::int64_t mono[] = { 1, 1, 1 };
    auto tri = colored_cycle(mono);
    CHECK(tri.size() == 3);
    CHECK(tri.color_count() == 1);
    CHECK(is_cycle(tri));
    CHECK(error_code_of([] { std::int64_t one[] = { 1 }; colored_cycle(one); }) == Errc::BadParameter);
}

TEST_CASE("classify")
{
    auto d6 = classify(named_instance("fig3-d6"));
    CHECK(d6.bipartite_tournament);
    CHECK_FALSE(d6.semi_complete);
    REQUIRE(d6.partition.has_value());
    CHECK(d6.partition->x.size() == 3);
    CHECK(d6.partition->y.size() == 3);

    auto t = classify(named_instance("fig2-tournament"));
    CHECK(t.tournament);
    CHECK(t.semi_complete);
    CHECK_FALSE(t.bipartite_tournament);

    std::int64_t alt[] = { 1, 2, 1, 2 };
    auto c = classify(colored_cycle(alt));
    CHECK(c.is_cycle);
    CHECK(c.unicyclic);
    CHECK(c.properly_arc_colored);
    CHECK(c.properly_connected);
    CHECK_FALSE(c.acyclic);
    CHECK_FALSE(c.monochromatic);

    auto path = classify(digraph(3, { { 0, 1, 1 }, { 1, 2, 1 } }));
    CHECK(path.acyclic);
    CHECK(path.monochromatic);
    CHECK_FALSE(path.unicyclic);
    CHECK_FALSE(path.properly_arc_colored);

    auto two_cycles = digraph(3, { { 0, 1, 1 }, { 1, 0, 2 }, { 1, 2, 1 }, { 2, 1, 2 } });
    CHECK_FALSE(is_unicyclic(two_cycles));
    auto mono_two_cycle = digraph(2, { { 0, 1, 1 }, { 1, 0, 1 } });
    CHECK_FALSE(is_properly_arc_colored(mono_two_cycle));
    CHECK(is_unicyclic(mono_two_cycle));
}

TEST_CASE("property: every colored cycle is classified as a cycle")
{
    pcpk::Rng rng(17);
    for (int trial = 0 ; trial < 200 ; ++trial) {
        auto n = 2 + uniform_below(rng, 8);
        std::vector<std::int64_t> colors(n);
        for (auto & c : colors)
            c = std::int64_t(1 + uniform_below(rng, 3));
        auto d = colored_cycle(colors);
        CHECK(is_cycle(d));
        CHECK(is_unicyclic(d));
        CHECK(d.arc_count() == n);
    }
}

TEST_CASE("property: validate is idempotent through serialization")
{
    for (std::uint64_t seed = 0 ; seed < 100 ; ++seed) {
        auto d = random_digraph(6, 0.4, 4, seed);
        auto again = parse_acd(serialize_acd(d));
        CHECK(again == d);
        CHECK(serialize_acd(again) == serialize_acd(d));
    }
}

TEST_CASE("property: classify flags agree with the naive cycle oracle")
{
    for (std::uint64_t seed = 0 ; seed < 300 ; ++seed) {
        auto d = random_digraph(5, 0.3, 2, seed);
        auto tags = classify(d);
        std::size_t cycles = 0;
        // Count directed cycles by brute force: each starts at its least vertex.
        std::vector<Vertex> path;
        std::function<void (Vertex)> grow = [&] (Vertex x) {
            if (path.size() >= 2 && d.has_arc(x, path.front()))
                ++cycles;
            for (Vertex y = path.front() + 1 ; y < d.size() ; ++y)
                if (d.has_arc(x, y) && std::find(path.begin(), path.end(), y) == path.end()) {
                    path.push_back(y);
                    grow(y);
                    path.pop_back();
                }
        };
        for (Vertex s = 0 ; s < d.size() ; ++s) {
            path = { s };
            grow(s);
        }
        CHECK(tags.acyclic == (cycles == 0));
        CHECK(tags.unicyclic == (cycles == 1));
    }
}
