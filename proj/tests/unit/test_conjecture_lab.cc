#include "helpers.hh"
#include "oracles.hh"

#include <pcpk/acd.hh>
#include <pcpk/conditions.hh>
#include <pcpk/generators.hh>
#include <pcpk/instances.hh>
#include <pcpk/lab.hh>
#include <pcpk/pcp_kernel.hh>
#include <pcpk/rng.hh>

#include <algorithm>

using namespace test;

namespace
{
    auto cycle_of(std::initializer_list<std::int64_t> colors) -> ColoredDigraph
    {
        std::vector<std::int64_t> list(colors);
        return colored_cycle(list);
    }

    auto is_cycle_in(const ColoredDigraph & d, const std::vector<Vertex> & c) -> bool
    {
        if (c.size() < 2)
            return false;
        std::vector<Vertex> sorted = c;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return false;
        for (std::size_t i = 0 ; i < c.size() ; ++i)
            if (! d.has_arc(c[i], c[(i + 1) % c.size()]))
                return false;
        return true;
    }
}

TEST_CASE("all cycles properly colored")
{
    auto left = named_instance("fig1-left");
    auto r = all_cycles_properly_colored(left);
    CHECK_FALSE(r.holds);
    CHECK(r.witness == vertices(left, { "v1", "v2", "v3", "v5", "v6" }));

    CHECK(all_cycles_properly_colored(digraph(3, { { 0, 1, 1 }, { 1, 2, 1 } })).holds);
    CHECK(all_cycles_properly_colored(digraph(2, { { 0, 1, 1 }, { 1, 0, 2 } })).holds);
    auto mono = all_cycles_properly_colored(digraph(2, { { 0, 1, 1 }, { 1, 0, 1 } }));
    CHECK_FALSE(mono.holds);
    CHECK(mono.witness == std::vector<Vertex>{ 0, 1 });
}

TEST_CASE("property: all-cycles check agrees with brute-force cycle enumeration (n <= 7)")
{
    std::size_t holding = 0;
    for (std::uint64_t seed = 0 ; seed < 800 ; ++seed) {
        auto d = random_digraph(2 + seed % 6, 0.2 + 0.05 * double(seed % 5), Color(1 + seed % 3), seed);
        auto r = all_cycles_properly_colored(d);
        CHECK(r.holds == oracle::all_cycles_pc(d));
        if (r.holds)
            ++holding;
        else {
            CHECK(is_cycle_in(d, r.witness));
            CHECK_FALSE(oracle::cycle_properly_colored(d, r.witness));
        }
    }
    CHECK(holding > 100);
}

TEST_CASE("k-cycles check")
{
    auto d6 = named_instance("fig3-d6");
    auto r = k_cycles_properly_colored(d6, { 4, 6 });
    CHECK_FALSE(r.holds);
    CHECK(is_cycle_in(d6, r.witness));
    CHECK((r.witness.size() == 4 || r.witness.size() == 6));

    CHECK(k_cycles_properly_colored(cycle_of({ 1, 2, 1, 2 }), { 4 }).holds);
    CHECK(k_cycles_properly_colored(cycle_of({ 1, 1, 1 }), { 4, 6 }).holds);
    CHECK_FALSE(k_cycles_properly_colored(cycle_of({ 1, 1, 1 }), { 3 }).holds);
    CHECK(error_code_of([&] { k_cycles_properly_colored(d6, { 1 }); }) == Errc::BadParameter);

    for (std::uint64_t seed = 0 ; seed < 300 ; ++seed) {
        auto d = random_digraph(6, 0.4, 2, seed);
        bool expected = true;
        for (auto & c : oracle::cycles(d))
            if ((c.size() == 3 || c.size() == 5) && ! oracle::cycle_properly_colored(d, c))
                expected = false;
        CHECK(k_cycles_properly_colored(d, { 3, 5 }).holds == expected);
    }
}

TEST_CASE("monochromatic triangles")
{
    auto t = named_instance("fig2-tournament");
    auto r = has_monochromatic_triangle(t);
    CHECK(r.holds);
    CHECK(r.witness == vertices(t, { "v2", "v3", "v4" }));
    CHECK_FALSE(has_monochromatic_triangle(cycle_of({ 1, 2, 1 })).holds);
    CHECK_FALSE(has_monochromatic_triangle(digraph(3, { { 0, 1, 1 }, { 1, 2, 1 }, { 0, 2, 1 } })).holds);

    for (std::uint64_t seed = 0 ; seed < 300 ; ++seed) {
        auto d = random_tournament(6, 2, seed);
        bool expected = false;
        for (auto & c : oracle::cycles(d))
            if (c.size() == 3 && d.color(c[0], c[1]) == d.color(c[1], c[2]) && d.color(c[1], c[2]) == d.color(c[2], c[0]))
                expected = true;
        CHECK(has_monochromatic_triangle(d).holds == expected);
    }
}

TEST_CASE("fuzzing the conjecture")
{
    FuzzParams none;
    none.samples = 0;
    auto empty = fuzz_conjecture(none);
    CHECK(empty.examined == 0);
    CHECK(empty.counterexamples.empty());

    FuzzParams p;
    p.n = 5;
    p.m = 3;
    p.samples = 300;
    p.seed = 7;
    auto r = fuzz_conjecture(p, { named_instance("fig1-left") });
    CHECK(r.examined == 301);
    CHECK(r.counterexamples.empty());
    CHECK(r.passing > 0);
    CHECK(r.passing < 301);

    auto only_left = fuzz_conjecture(none, { named_instance("fig1-left") });
    CHECK(only_left.examined == 1);
    CHECK(only_left.passing == 0);
    CHECK(check_property("conjecture", named_instance("fig1-left")).passing == false);

    p.jobs = 3;
    auto parallel = fuzz_conjecture(p, { named_instance("fig1-left") });
    CHECK(report_to_json(parallel) == report_to_json(r));
    CHECK(report_to_lines(parallel) == report_to_lines(r));

    FuzzParams big;
    big.n = 11;
    CHECK(error_code_of([&] { fuzz_conjecture(big); }) == Errc::BadParameter);
}

TEST_CASE("theorem sweeps")
{
    SweepParams five;
    five.n = 5;
    five.m = 2;
    auto r = sweep_theorem("thm4-exhaustive", five);
    CHECK(r.examined == 32);
    CHECK(r.tallies["kernel_exists"] == 30);
    CHECK(r.counterexamples.empty());

    SweepParams four;
    four.n = 4;
    four.m = 1;
    auto r4 = sweep_theorem("thm4-exhaustive", four);
    CHECK(r4.examined == 1);
    CHECK(r4.tallies["kernel_exists"] == 1);

    SweepParams lemma;
    lemma.samples = 100;
    lemma.nx = 3;
    lemma.ny = 3;
    lemma.m = 3;
    auto l2 = sweep_theorem("lemma2-fuzz", lemma);
    CHECK(l2.passing == 100);
    CHECK(l2.counterexamples.empty());

    SweepParams small;
    small.samples = 40;
    small.n = 6;
    for (auto family : family_names()) {
        if (family == "conjecture" || family == "thm4-exhaustive")
            continue;
        auto s = sweep_theorem(family, small);
        CHECK_MESSAGE(s.counterexamples.empty(), family);
        CHECK_MESSAGE(s.passing == 40, family);
        CHECK(report_to_json(sweep_theorem(family, small)) == report_to_json(s));
    }

    CHECK(error_code_of([] { sweep_theorem("thm99", SweepParams{}); }) == Errc::BadParameter);
    SweepParams nine;
    nine.n = 9;
    CHECK(error_code_of([&] { sweep_theorem("thm4-exhaustive", nine); }) == Errc::BadParameter);
}

TEST_CASE("reports serialize and round-trip")
{
    SweepParams p;
    p.samples = 20;
    auto r = sweep_theorem("thm6-fuzz", p);
    auto json = report_to_json(r);
    auto back = report_from_json(json);
    CHECK(report_to_json(back) == json);
    CHECK(json.find("\"instances_examined\"") != std::string::npos);
    CHECK(json.find("wall") == std::string::npos);
    CHECK(report_to_lines(r).find("family thm6-fuzz") != std::string::npos);

    CheckReport fake;
    fake.family = "conjecture";
    Counterexample c;
    c.property = "conjecture";
    c.failure = "made up";
    c.acd = serialize_acd(named_instance("fig2-tournament"));
    fake.counterexamples.push_back(c);
    auto fake_back = report_from_json(report_to_json(fake));
    REQUIRE(fake_back.counterexamples.size() == 1);
    CHECK(fake_back.counterexamples[0] == c);
    CHECK(report_to_lines(fake).find("| acd 1") != std::string::npos);
    // fig2-tournament has a monochromatic cycle, so it is no conjecture counterexample.
    CHECK_FALSE(recheck_counterexample(c));
}

TEST_CASE("remark4 composites have no PCP-kernel")
{
    Rng rng(11);
    for (std::uint64_t sample = 0 ; sample < 50 ; ++sample) {
        auto base = random_digraph(1 + sample % 3, 0.5, 2, sample);
        ConnectColoring policy;
        policy.kind = ConnectColoring::Kind(sample % 3);
        policy.color = Color(1 + uniform_below(rng, 3));
        policy.seed = sample;
        auto d = remark4(base, policy);
        CHECK(d.size() == base.size() + 6);
        CHECK_FALSE(solve_pcp_exact(d).has_value());
    }
}
