#include <pcpk/cli.hh>
#include <pcpk/acd.hh>
#include <pcpk/classify.hh>
#include <pcpk/closure.hh>
#include <pcpk/conditions.hh>
#include <pcpk/error.hh>
#include <pcpk/generators.hh>
#include <pcpk/instances.hh>
#include <pcpk/lab.hh>
#include <pcpk/reduction.hh>
#include <pcpk/solve.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

using std::optional;
using std::string;
using std::vector;

namespace pcpk::cli
{
    namespace
    {
        struct InputError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        auto read_text(const string & path, std::istream & in) -> string
        {
            if (path == "-")
                return string(std::istreambuf_iterator<char>(in), {});
            std::ifstream file(path, std::ios::binary);
            if (! file)
                throw InputError("cannot read '" + path + "'");
            std::ostringstream text;
            text << file.rdbuf();
            return text.str();
        }

        auto split_numbers(const string & text) -> vector<std::int64_t>
        {
            vector<std::int64_t> values;
            std::istringstream list(text);
            string item;
            while (std::getline(list, item, ',')) {
                try {
                    std::size_t used = 0;
                    values.push_back(std::stoll(item, &used));
                    if (used != item.size())
                        throw std::invalid_argument(item);
                }
                catch (const std::logic_error &) {
                    throw Error(Errc::BadParameter, "not an integer: '" + item + "'");
                }
            }
            return values;
        }

        /// NAME, remark1-even:N, remark1-odd:N or colored-cycle:C1,C2,...
        auto pseudo_instance(const string & spec) -> ColoredDigraph
        {
            auto colon = spec.find(':');
            auto name = spec.substr(0, colon);
            auto argument = colon == string::npos ? string() : spec.substr(colon + 1);
            if (name == "remark1-even" || name == "remark1-odd" || name == "colored-cycle") {
                auto values = split_numbers(argument);
                if (values.empty() || (name != "colored-cycle" && (values.size() != 1 || values[0] < 0)))
                    throw Error(Errc::BadParameter, name + " needs an argument");
                if (name == "colored-cycle")
                    return colored_cycle(values);
                return name == "remark1-even" ? remark1_even(std::size_t(values[0])) : remark1_odd(std::size_t(values[0]));
            }
            return named_instance(spec);
        }

        auto load(const string & path, std::istream & in) -> ColoredDigraph
        {
            if (path.starts_with("instance:"))
                return pseudo_instance(path.substr(9));
            return parse_acd(read_text(path, in));
        }

        auto exit_for(Errc code) -> int
        {
            switch (code) {
                case Errc::SyntaxError:
                case Errc::UnknownVertexLabel:
                case Errc::LoopArc:
                case Errc::DuplicateArc:
                case Errc::NonPositiveColor:
                case Errc::VertexOutOfRange:
                    return exit_code::parse;
                case Errc::BadParameter:
                case Errc::UnknownInstance:
                case Errc::SameVertex:
                    return exit_code::usage;
                case Errc::BudgetExceeded:
                case Errc::TooLarge:
                    return exit_code::budget;
                default:
                    return exit_code::not_applicable;
            }
        }

        auto set_text(const ColoredDigraph & d, const vector<Vertex> & vs) -> string
        {
            string out = "{";
            for (std::size_t i = 0 ; i < vs.size() ; ++i)
                out += (i ? "," : "") + d.label(vs[i]);
            return out + "}";
        }

        auto cycle_text(const ColoredDigraph & d, const vector<Vertex> & vs) -> string
        {
            string out = "(";
            for (std::size_t i = 0 ; i < vs.size() ; ++i)
                out += (i ? "," : "") + d.label(vs[i]);
            return out + ")";
        }

        auto digraph_text(const ColoredDigraph & d, const string & format) -> string
        {
            return format == "dot" ? to_dot(d) : serialize_acd(d);
        }

        auto certificate_json(const ColoredDigraph & d, const PcpKernelCertificate & c) -> string
        {
            nlohmann::ordered_json j;
            j["mode"] = path_mode_name(c.mode);
            j["method"] = c.method;
            j["fallback_used"] = c.fallback_used;
            j["trail"] = c.trail;
            vector<string> members;
            for (auto v : c.members)
                members.push_back(d.label(v));
            j["members"] = members;
            auto absorption = nlohmann::ordered_json::array();
            for (auto & p : c.absorption) {
                vector<string> path;
                for (auto v : p.vertices)
                    path.push_back(d.label(v));
                absorption.push_back({ { "vertex", d.label(p.source()) }, { "path", path }, { "colors", p.colors } });
            }
            j["absorption"] = absorption;
            auto independence = nlohmann::ordered_json::array();
            for (auto [s, t] : c.independence)
                independence.push_back({ d.label(s), d.label(t) });
            j["independence"] = independence;
            return j.dump(2) + "\n";
        }

        struct Options
        {
            string input, second, format = "acd", mode = "pc", klass, condition, name, family, policy = "constant";
            string colors, base;
            vector<string> inject;
            vector<std::size_t> lengths{ 4, 6 };
            bool exact = false, list = false;
            std::size_t n = 0, nx = 0, ny = 0;
            std::uint32_t m = 0;
            std::uint64_t seed = 0, samples = 0, max_attempts = 0, budget = default_search_budget;
            std::uint64_t policy_color = 1;
            double p = 0.5;
            unsigned jobs = 1;
            string witnesses;
        };

        auto report_result(const CheckReport & r, const string & format) -> CommandResult
        {
            CommandResult result;
            result.payload = format == "lines" ? report_to_lines(r) : report_to_json(r);
            std::ostringstream summary;
            summary << r.family << ": examined " << r.examined << ", passing precondition " << r.passing
                    << ", budget exceeded " << r.budget_exceeded << ", counterexamples " << r.counterexamples.size();
            for (auto & c : r.counterexamples)
                summary << (recheck_counterexample(c) ? " [re-verified]" : " [did not re-verify]");
            summary.precision(3);
            summary << std::fixed << " (" << r.wall_seconds << " s)";
            result.summary = summary.str();
            result.exit_code = r.counterexamples.empty() ? exit_code::holds : exit_code::discovery;
            return result;
        }

        auto run_parse(const Options & o, std::istream & in) -> CommandResult
        {
            auto d = load(o.input, in);
            return { exit_code::holds, "valid digraph: " + std::to_string(d.size()) + " vertices, "
                + std::to_string(d.arc_count()) + " arcs, " + std::to_string(d.color_count()) + " colors",
                digraph_text(d, o.format) };
        }

        auto run_closure(const Options & o, std::istream & in) -> CommandResult
        {
            auto d = load(o.input, in);
            auto cl = closure(d, parse_path_mode(o.mode), ClosureOptions{ o.budget, o.jobs });
            if (! o.witnesses.empty()) {
                std::ofstream file(o.witnesses, std::ios::binary);
                if (! file)
                    throw InputError("cannot write '" + o.witnesses + "'");
                file << closure_witness_text(d, cl);
            }
            return { exit_code::holds, "closure: " + std::to_string(cl.graph().arc_count()) + " arcs",
                digraph_text(closure_as_colored(d, cl), o.format) };
        }

        auto run_solve(const Options & o, std::istream & in) -> CommandResult
        {
            auto d = load(o.input, in);
            auto mode = parse_path_mode(o.mode);
            DispatchOptions options;
            options.solve = SolveOptions{ o.budget, o.jobs };
            if (o.exact)
                options.forced = ForcedClass::Exact;
            if (! o.klass.empty())
                options.forced = parse_forced_class(o.klass);
            auto c = solve_pcp(d, mode, options);
            if (! c)
                return { exit_code::fails, mode == PathMode::Rainbow ? "no kernel by rainbow paths" : "no PCP-kernel", {} };
            auto payload = o.format == "json" ? certificate_json(d, *c) : format_certificate(d, *c);
            return { exit_code::holds, "PCP-kernel S = " + set_text(d, c->members) + " (" + c->method + ")", payload };
        }

        auto run_verify(const Options & o, std::istream & in) -> CommandResult
        {
            auto d = load(o.input, in);
            auto parsed = parse_certificate(d, read_text(o.second, in));
            auto mode = ! o.mode.empty() ? parse_path_mode(o.mode) : parsed.mode.value_or(PathMode::ProperlyColored);
            auto check = check_certificate(d, parsed, mode, SolveOptions{ o.budget, 1 });
            if (check.valid)
                return { exit_code::holds, "certificate valid: S = " + set_text(d, parsed.members), {} };
            return { exit_code::fails, "certificate invalid: " + check.reason, {} };
        }

        auto run_check(const Options & o, std::istream & in) -> CommandResult
        {
            auto d = load(o.input, in);
            if (o.condition == "class")
                return { exit_code::holds, "class tags", format_class_tags(d, classify(d)) };
            if (o.condition == "mono-triangle") {
                auto r = has_monochromatic_triangle(d);
                if (r.holds)
                    return { exit_code::fails, "monochromatic triangle " + cycle_text(d, r.witness), {} };
                return { exit_code::holds, "no monochromatic triangle", {} };
            }
            ConditionResult r;
            if (o.condition == "all-cycles-pc")
                r = all_cycles_properly_colored(d);
            else
                r = k_cycles_properly_colored(d, std::set<std::size_t>(o.lengths.begin(), o.lengths.end()));
            if (r.holds)
                return { exit_code::holds, o.condition + ": holds", {} };
            return { exit_code::fails, o.condition + ": fails, cycle " + cycle_text(d, r.witness) + " is not properly colored", {} };
        }

        auto run_instance(const Options & o, std::istream & in) -> CommandResult
        {
            if (o.list) {
                string names;
                for (auto & name : named_instance_names())
                    names += name + "\n";
                names += "remark1-even\nremark1-odd\nremark4\ncolored-cycle\nrandom-digraph\nrandom-tournament\n"
                         "random-bipartite-tournament\nrandom-semicomplete\nrandom-unicyclic\n";
                return { exit_code::holds, "instance names", names };
            }
            if (o.name.empty())
                throw Error(Errc::BadParameter, "an instance name is required");

            ColoredDigraph d;
            if (o.name == "remark1-even")
                d = remark1_even(o.n);
            else if (o.name == "remark1-odd")
                d = remark1_odd(o.n);
            else if (o.name == "colored-cycle")
                d = colored_cycle(split_numbers(o.colors));
            else if (o.name == "remark4") {
                if (o.base.empty())
                    throw Error(Errc::BadParameter, "remark4 needs --base");
                ConnectColoring policy;
                if (o.policy == "constant")
                    policy.kind = ConnectColoring::Kind::Constant;
                else if (o.policy == "cyclic")
                    policy.kind = ConnectColoring::Kind::Cyclic;
                else
                    policy.kind = ConnectColoring::Kind::Random;
                policy.color = Color(o.policy_color);
                policy.seed = o.seed;
                d = remark4(load(o.base, in), policy);
            }
            else if (o.name.starts_with("random-")) {
                GeneratorParams g{ o.n, o.nx, o.ny, o.m ? o.m : 1, o.p };
                d = generate(parse_generator_kind(o.name), g, o.seed);
            }
            else
                d = named_instance(o.name);
            return { exit_code::holds, o.name + ": " + std::to_string(d.size()) + " vertices, "
                + std::to_string(d.arc_count()) + " arcs", digraph_text(d, o.format) };
        }

        auto run_reduce(const Options & o, std::istream & in) -> CommandResult
        {
            auto d = load(o.input, in);
            auto r = reduction_kernel_to_pathkernel(PlainDigraph::underlying(d), Color(o.m), parse_path_mode(o.mode));
            return { exit_code::holds, "gadget: " + std::to_string(r.new_vertices.size()) + " new vertices, "
                + std::to_string(r.d_prime.color_count()) + " colors", digraph_text(r.d_prime, o.format) };
        }

        auto run_fuzz(const Options & o, std::istream & in) -> CommandResult
        {
            FuzzParams p;
            p.n = o.n ? o.n : 5;
            p.nx = o.nx;
            p.ny = o.ny;
            p.m = o.m ? o.m : 3;
            p.samples = o.samples;
            p.seed = o.seed;
            p.kind = parse_generator_kind(o.name.empty() ? "random-digraph" : o.name);
            p.arc_probability = o.p;
            p.jobs = o.jobs;
            vector<ColoredDigraph> injected;
            for (auto & path : o.inject)
                injected.push_back(load(path, in));
            return report_result(fuzz_conjecture(p, injected), o.format);
        }

        auto run_sweep(const Options & o) -> CommandResult
        {
            SweepParams p;
            if (o.n)
                p.n = o.n;
            if (o.nx)
                p.nx = o.nx;
            if (o.ny)
                p.ny = o.ny;
            if (o.m)
                p.m = o.m;
            p.samples = o.samples;
            p.max_attempts = o.max_attempts;
            p.seed = o.seed;
            p.arc_probability = o.p;
            p.jobs = o.jobs;
            return report_result(sweep_theorem(o.family, p), o.format);
        }
    }

    auto run(const vector<string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> CommandResult
    {
        Options o;
        CLI::App app{ "Kernels by properly colored paths in arc-colored digraphs", "pcpk" };
        app.require_subcommand(1);
        auto input_help = "ACD file, '-' for standard input, or instance:NAME";
        auto mode_check = CLI::IsMember({ "pc", "properly-colored", "rainbow" });
        auto digraph_format = CLI::IsMember({ "acd", "dot" });
        auto report_format = CLI::IsMember({ "json", "lines" });

        auto parse = app.add_subcommand("parse", "Validate a digraph and print it as ACD or DOT");
        parse->add_option("input", o.input, input_help)->required();
        parse->add_option("--to", o.format, "Output format")->check(digraph_format);

        auto closure_cmd = app.add_subcommand("closure", "Print the closure and optionally its witness paths");
        closure_cmd->add_option("input", o.input, input_help)->required();
        closure_cmd->add_option("--mode", o.mode, "Path semantics")->check(mode_check);
        closure_cmd->add_option("--to", o.format, "Output format")->check(digraph_format);
        closure_cmd->add_option("--witnesses", o.witnesses, "Write one witness line per closure arc to this file");
        closure_cmd->add_option("--jobs", o.jobs, "Worker threads");
        closure_cmd->add_option("--budget", o.budget, "Search steps per path query");

        auto solve = app.add_subcommand("solve", "Find a PCP-kernel and print its certificate");
        solve->add_option("input", o.input, input_help)->required();
        solve->add_option("--mode", o.mode, "Path semantics")->check(mode_check);
        solve->add_flag("--exact", o.exact, "Always use the closure-based exact solver");
        solve->add_option("--class", o.klass, "Run one constructor only")->check(CLI::IsMember(forced_class_names()));
        solve->add_option("--format", o.format, "Certificate format")->check(CLI::IsMember({ "text", "json" }));
        solve->add_option("--jobs", o.jobs, "Worker threads");
        solve->add_option("--budget", o.budget, "Search steps per path query");

        auto verify = app.add_subcommand("verify", "Re-check a certificate against a digraph");
        verify->add_option("input", o.input, input_help)->required();
        verify->add_option("certificate", o.second, "Certificate file or '-'")->required();
        verify->add_option("--mode", o.mode, "Path semantics (default: the certificate's)")->check(mode_check);
        verify->add_option("--budget", o.budget, "Search steps per path query");

        auto check = app.add_subcommand("check", "Check a coloring condition or print class tags");
        check->add_option("condition", o.condition, "all-cycles-pc, k-cycles-pc, mono-triangle or class")
            ->required()->check(CLI::IsMember({ "all-cycles-pc", "k-cycles-pc", "mono-triangle", "class" }));
        check->add_option("input", o.input, input_help)->required();
        check->add_option("--k", o.lengths, "Cycle lengths for k-cycles-pc")->delimiter(',');

        auto instance = app.add_subcommand("instance", "Print a named, family or random instance");
        instance->add_option("name", o.name, "Instance name (see --list)");
        instance->add_flag("--list", o.list, "List instance names");
        instance->add_option("--n", o.n, "Vertex count");
        instance->add_option("--nx", o.nx, "|X| of a random bipartite tournament");
        instance->add_option("--ny", o.ny, "|Y| of a random bipartite tournament");
        instance->add_option("--m", o.m, "Number of colors");
        instance->add_option("--p", o.p, "Arc probability");
        instance->add_option("--seed", o.seed, "Generator seed");
        instance->add_option("--colors", o.colors, "Comma-separated colors for colored-cycle");
        instance->add_option("--base", o.base, "Base digraph for remark4");
        instance->add_option("--policy", o.policy, "Coloring of the remark4 connecting arcs")
            ->check(CLI::IsMember({ "constant", "cyclic", "random" }));
        instance->add_option("--policy-color", o.policy_color, "Constant color, or palette size for cyclic/random");
        instance->add_option("--to", o.format, "Output format")->check(digraph_format);

        auto reduce = app.add_subcommand("reduce", "Build the hardness gadget of a digraph");
        reduce->add_option("input", o.input, input_help)->required();
        reduce->add_option("--m", o.m, "Number of colors")->required();
        reduce->add_option("--mode", o.mode, "Intended path semantics")->check(mode_check);
        reduce->add_option("--to", o.format, "Output format")->check(digraph_format);

        auto fuzz = app.add_subcommand("fuzz", "Search random digraphs for counterexamples to the conjecture");
        fuzz->add_option("--kind", o.name, "Generator kind");
        fuzz->add_option("--n", o.n, "Vertex count (at most 10)");
        fuzz->add_option("--nx", o.nx, "|X| for bipartite tournaments");
        fuzz->add_option("--ny", o.ny, "|Y| for bipartite tournaments");
        fuzz->add_option("--m", o.m, "Number of colors");
        fuzz->add_option("--p", o.p, "Arc probability");
        fuzz->add_option("--samples", o.samples, "Number of generated digraphs");
        fuzz->add_option("--seed", o.seed, "Base seed");
        fuzz->add_option("--inject", o.inject, "Extra digraphs examined first");
        fuzz->add_option("--jobs", o.jobs, "Worker threads");
        fuzz->add_option("--format", o.format, "Report format")->check(report_format);

        auto sweep = app.add_subcommand("sweep", "Regression-check a theorem over exhaustive or random instances");
        auto sweep_families = family_names();
        std::erase(sweep_families, "conjecture");
        sweep->add_option("family", o.family, "Family id")->required()->check(CLI::IsMember(sweep_families));
        sweep->add_option("--n", o.n, "Largest vertex count, or the cycle length for thm4-exhaustive");
        sweep->add_option("--nx", o.nx, "Largest |X|");
        sweep->add_option("--ny", o.ny, "Largest |Y|");
        sweep->add_option("--m", o.m, "Largest number of colors");
        sweep->add_option("--p", o.p, "Arc probability");
        sweep->add_option("--samples", o.samples, "Instances that must pass the precondition");
        sweep->add_option("--max-attempts", o.max_attempts, "Cap on generated instances");
        sweep->add_option("--seed", o.seed, "Base seed");
        sweep->add_option("--jobs", o.jobs, "Worker threads");
        sweep->add_option("--format", o.format, "Report format")->check(report_format);

        CommandResult result;
        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
            if (fuzz->parsed() || sweep->parsed())
                o.format = o.format == "acd" ? "json" : o.format;
            if (solve->parsed() && o.format == "acd")
                o.format = "text";
            if (verify->parsed() && verify->count("--mode") == 0)
                o.mode.clear();

            if (parse->parsed())
                result = run_parse(o, in);
            else if (closure_cmd->parsed())
                result = run_closure(o, in);
            else if (solve->parsed())
                result = run_solve(o, in);
            else if (verify->parsed())
                result = run_verify(o, in);
            else if (check->parsed())
                result = run_check(o, in);
            else if (instance->parsed())
                result = run_instance(o, in);
            else if (reduce->parsed())
                result = run_reduce(o, in);
            else if (fuzz->parsed())
                result = run_fuzz(o, in);
            else
                result = run_sweep(o);
        }
        catch (const CLI::ParseError & e) {
            std::ostringstream text, errors;
            auto code = app.exit(e, text, errors);
            result.exit_code = code == 0 ? exit_code::holds : exit_code::usage;
            result.summary = errors.str();
            if (! text.str().empty())
                result.payload = text.str();
            while (! result.summary.empty() && result.summary.back() == '\n')
                result.summary.pop_back();
        }
        catch (const InputError & e) {
            result = { exit_code::no_input, e.what(), {} };
        }
        catch (const Error & e) {
            result = { exit_for(e.code()), e.what(), {} };
        }

        if (result.payload) {
            out << *result.payload;
            if (! result.summary.empty())
                err << result.summary << "\n";
        }
        else if (! result.summary.empty())
            (result.exit_code >= exit_code::usage ? err : out) << result.summary << "\n";
        return result;
    }
}
