#include "helpers.hh"

#include <pcpk/cli.hh>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace test;

namespace
{
    struct Run
    {
        int code;
        std::string out;
        std::string err;
    };

    auto run(std::vector<std::string> args, const std::string & input = "") -> Run
    {
        std::istringstream in(input);
        std::ostringstream out, err;
        auto result = pcpk::cli::run(args, in, out, err);
        return { result.exit_code, out.str(), err.str() };
    }

    auto temp_file(const std::string & name, const std::string & content) -> std::string
    {
        auto path = std::string("/tmp/pcpk_cli_test_") + name;
        std::ofstream(path) << content;
        return path;
    }

    const std::string c4_mono = "acd 1\nv v0\nv v1\nv v2\nv v3\na v0 v1 1\na v1 v2 1\na v2 v3 1\na v3 v0 1\n";
}

TEST_CASE("cli: solve")
{
    auto left = run({ "solve", "instance:fig1-left" });
    CHECK(left.code == 1);
    CHECK(left.out.find("no PCP-kernel") != std::string::npos);

    auto c4 = run({ "solve", "-" }, c4_mono);
    CHECK(c4.code == 0);
    CHECK(c4.out.find("S: {v0,v2}") != std::string::npos);

    auto json = run({ "solve", "-", "--format", "json" }, c4_mono);
    CHECK(json.code == 0);
    CHECK(json.out.find("\"members\"") != std::string::npos);

    CHECK(run({ "solve", "instance:fig1-left", "--class", "cycle" }).code == pcpk::cli::exit_code::not_applicable);
    CHECK(run({ "solve", "instance:colored-cycle:1,1,1,1", "--class", "cycle" }).code == 0);
    CHECK(run({ "solve", "instance:colored-cycle:1,1,1", "--exact" }).code == 1);
    CHECK(run({ "solve", "instance:fig3-d6", "--mode", "rainbow" }).code == 1);
}

TEST_CASE("cli: solve output verifies")
{
    auto input = temp_file("c4.acd", c4_mono);
    for (auto source : { input, std::string("instance:remark1-odd:9"), std::string("instance:colored-cycle:1,2,2,1,3") }) {
        auto solved = run({ "solve", source });
        if (solved.code != 0)
            continue;
        auto cert = temp_file("cert.txt", solved.out);
        auto verified = run({ "verify", source, cert });
        CHECK_MESSAGE(verified.code == 0, source);
    }
    auto bad = temp_file("bad_cert.txt", "S: {v0,v1}\n");
    CHECK(run({ "verify", input, bad }).code == 1);
}

TEST_CASE("cli: checks")
{
    auto left = run({ "check", "all-cycles-pc", "instance:fig1-left" });
    CHECK(left.code == 1);
    CHECK(left.out.find("(v1,v2,v3,v5,v6)") != std::string::npos);
    CHECK(run({ "check", "k-cycles-pc", "instance:fig3-d6", "--k", "4,6" }).code == 1);
    CHECK(run({ "check", "k-cycles-pc", "instance:colored-cycle:1,2,1,2", "--k", "4" }).code == 0);
    CHECK(run({ "check", "mono-triangle", "instance:fig2-tournament" }).code == 1);
    CHECK(run({ "check", "mono-triangle", "instance:colored-cycle:1,2,1" }).code == 0);
    auto tags = run({ "check", "class", "instance:fig3-d6" });
    CHECK(tags.code == 0);
    CHECK(tags.out.find("bipartite-tournament: true") != std::string::npos);
}

TEST_CASE("cli: parse, closure, instance and reduce")
{
    auto parsed = run({ "parse", "instance:fig2-tournament" });
    CHECK(parsed.code == 0);
    CHECK(parsed.out.starts_with("acd 1\n"));
    CHECK(run({ "parse", "instance:fig2-tournament", "--to", "dot" }).out.starts_with("digraph"));

    auto witnesses = std::string("/tmp/pcpk_cli_test_witnesses.txt");
    auto cl = run({ "closure", "instance:fig3-d6", "--witnesses", witnesses });
    CHECK(cl.code == 0);
    std::ifstream w(witnesses);
    std::string first;
    std::getline(w, first);
    CHECK(first.starts_with("w "));

    CHECK(run({ "instance", "fig1-right" }).out.find("v u9") != std::string::npos);
    CHECK(run({ "instance", "--list" }).out.find("remark4") != std::string::npos);
    CHECK(run({ "instance", "remark1-even", "--n", "8" }).code == 0);
    CHECK(run({ "instance", "random-tournament", "--n", "5", "--m", "2", "--seed", "1" }).out
        == run({ "instance", "random-tournament", "--n", "5", "--m", "2", "--seed", "1" }).out);
    auto base = temp_file("base.acd", "acd 1\nv b\n");
    auto r4 = run({ "instance", "remark4", "--base", base });
    CHECK(r4.code == 0);
    CHECK(run({ "solve", "-" }, r4.out).code == 1);

    auto gadget = run({ "reduce", "instance:colored-cycle:1,1,1", "--m", "2" });
    CHECK(gadget.code == 0);
    CHECK(run({ "solve", "-" }, gadget.out).code == 1);
}

TEST_CASE("cli: fuzz and sweep")
{
    std::vector<std::string> args = { "fuzz", "--n", "5", "--m", "3", "--samples", "200", "--seed", "7",
        "--inject", "instance:fig1-left" };
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"instances_examined\": 201") != std::string::npos);

    auto sweep = run({ "sweep", "thm4-exhaustive", "--n", "5", "--m", "2" });
    CHECK(sweep.code == 0);
    CHECK(sweep.out.find("\"kernel_exists\": 30") != std::string::npos);
    CHECK(run({ "sweep", "thm6-fuzz", "--samples", "10", "--format", "lines" }).out.starts_with("family thm6-fuzz"));
}

TEST_CASE("cli: exit codes for errors")
{
    using namespace pcpk::cli;
    CHECK(run({}).code == exit_code::usage);
    CHECK(run({ "frobnicate" }).code == exit_code::usage);
    CHECK(run({ "solve" }).code == exit_code::usage);
    CHECK(run({ "solve", "instance:nope" }).code == exit_code::usage);
    CHECK(run({ "solve", "-", "--mode", "sideways" }).code == exit_code::usage);
    CHECK(run({ "solve", "-" }, "acd 1\nv a\na a b 1\n").code == exit_code::parse);
    CHECK(run({ "solve", "-" }, "acd 1\nv a\nv b\na a b 0\n").code == exit_code::parse);
    CHECK(run({ "solve", "/nonexistent/file.acd" }).code == exit_code::no_input);
    CHECK(run({ "solve", "instance:fig1-right", "--exact", "--budget", "1" }).code == exit_code::budget);
    CHECK(run({ "fuzz", "--n", "11" }).code == exit_code::usage);
    auto help = run({ "--help" });
    CHECK(help.code == 0);
    CHECK(help.out.find("solve") != std::string::npos);
}
