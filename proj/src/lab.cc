#include <pcpk/lab.hh>
#include <pcpk/acd.hh>
#include <pcpk/classify.hh>
#include <pcpk/closure.hh>
#include <pcpk/conditions.hh>
#include <pcpk/constructors.hh>
#include <pcpk/error.hh>
#include <pcpk/kernel.hh>
#include <pcpk/parallel.hh>
#include <pcpk/reduction.hh>
#include <pcpk/rng.hh>
#include <pcpk/solve.hh>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>

using std::optional;
using std::string;
using std::vector;

namespace pcpk
{
    namespace
    {
        using Json = nlohmann::ordered_json;
        using Check = std::function<auto (const ColoredDigraph &, const string &, InstanceOutcome &) -> void>;

        auto has_two_cycle(const ColoredDigraph & d) -> bool
        {
            for (Vertex u = 0 ; u < d.size() ; ++u)
                for (auto & a : d.out_arcs(u))
                    if (a.head > u && d.has_arc(a.head, u))
                        return true;
            return false;
        }

        auto check_conjecture(const ColoredDigraph & d, const string &, InstanceOutcome & out) -> void
        {
            if (! all_cycles_properly_colored(d).holds) {
                ++out.tallies["filtered"];
                return;
            }
            out.passing = true;
            if (has_two_cycle(d))
                ++out.tallies["with_2_cycles"];
            if (auto c = solve_pcp(d)) {
                ++out.tallies["kernel_found"];
                ++out.tallies["method:" + c->method];
            }
            else
                out.failure = "every cycle is properly colored but there is no PCP-kernel";
        }

        auto check_thm4(const ColoredDigraph & d, const string &, InstanceOutcome & out) -> void
        {
            if (! is_cycle(d))
                return;
            out.passing = true;
            bool monochromatic_odd = d.color_count() <= 1 && d.size() % 2 == 1;
            auto exact = solve_pcp_exact(d);
            auto built = pcp_kernel_of_cycle(d);
            if (exact)
                ++out.tallies["kernel_exists"];
            if (built)
                ++out.tallies["constructor_kernel"];
            if (built && built->fallback_used)
                ++out.tallies["constructor_fallback"];

            if (exact.has_value() == monochromatic_odd)
                out.failure = "kernel existence differs from 'not a monochromatic odd cycle'";
            else if (built.has_value() != exact.has_value())
                out.failure = "cycle constructor and exact solver disagree on existence";
            else if (built && built->fallback_used) {
                out.failure = "cycle constructor output failed verification";
                out.certificate = format_certificate(d, *built);
            }
        }

        auto check_thm5(const ColoredDigraph & d, const string &, InstanceOutcome & out) -> void
        {
            auto cycle = unique_cycle(d);
            if (! cycle || ! cycle_is_properly_colored(d, *cycle))
                return;
            out.passing = true;
            auto built = pcp_kernel_of_unicyclic(d);
            auto exact = solve_pcp_exact(d);
            auto dispatched = solve_pcp(d);
            if (exact)
                ++out.tallies["kernel_found"];
            if (built.fallback_used)
                ++out.tallies["constructor_fallback"];
            if (dispatched) {
                ++out.tallies["dispatcher:" + dispatched->method];
                if (std::any_of(dispatched->trail.begin(), dispatched->trail.end(),
                            [] (const string & s) { return s.starts_with("anomaly"); }))
                    ++out.tallies["dispatcher_anomaly_logged"];
                if (dispatched->fallback_used)
                    ++out.tallies["dispatcher_fallback"];
            }

            if (! exact)
                out.failure = "unicyclic digraph with a properly colored cycle has no PCP-kernel";
            else if (built.fallback_used) {
                out.failure = "unicyclic constructor output failed verification";
                out.certificate = format_certificate(d, built);
            }
            else if (! dispatched || dispatched->fallback_used)
                out.failure = "dispatcher fell back to the exact solver";
        }

        auto check_thm6(const ColoredDigraph & d, const string &, InstanceOutcome & out) -> void
        {
            if (! is_semi_complete(d) || has_monochromatic_triangle(d).holds)
                return;
            out.passing = true;
            auto good = good_vertex_semicomplete(d);
            if (good)
                ++out.tallies["good_vertex"];
            if (pcp_kernel_semicomplete(d))
                ++out.tallies["kernel_found"];
            if (! good)
                out.failure = "semi-complete digraph without monochromatic triangle has no good vertex";
        }

        auto check_thm7i(const ColoredDigraph & d, const string &, InstanceOutcome & out) -> void
        {
            auto p = bipartite_partition(d);
            if (! p || ! k_cycles_properly_colored(d, { 4, 6 }).holds)
                return;
            out.passing = true;
            auto exact = solve_pcp_exact(d);
            auto built = pcp_kernel_bipartite(d, *p);
            if (exact)
                ++out.tallies["kernel_found"];
            if (built)
                ++out.tallies["method:" + built->method];
            if (! exact)
                out.failure = "bipartite tournament with properly colored 4- and 6-cycles has no PCP-kernel";
            else if (! built || built->fallback_used)
                out.failure = "bipartite constructor did not produce a verified kernel";
        }

        auto check_thm7ii(const ColoredDigraph & d, const string &, InstanceOutcome & out) -> void
        {
            auto p = bipartite_partition(d);
            if (! p || std::min(p->x.size(), p->y.size()) > 2)
                return;
            out.passing = true;
            BipartiteTrace trace;
            auto built = pcp_kernel_bipartite(d, *p, {}, &trace);
            auto exact = solve_pcp_exact(d);
            if (exact)
                ++out.tallies["kernel_found"];
            if (built)
                ++out.tallies["method:" + built->method];
            if (built && built->method == "bipartite-case-analysis")
                ++out.tallies["outcome:" + trace.outcome];
            if (! exact)
                out.failure = "bipartite tournament with a side of at most two vertices has no PCP-kernel";
            else if (! built)
                out.failure = "bipartite constructor found no kernel";
            else if (built->fallback_used) {
                out.failure = "bipartite constructor output failed verification (" + trace.outcome + ")";
                out.certificate = format_certificate(d, *built);
            }
        }

        auto check_lemma1(const ColoredDigraph & d, const string &, InstanceOutcome & out) -> void
        {
            if (! bipartite_partition(d))
                return;
            out.passing = true;
            auto cl = closure(d);
            for (auto [u, v] : cl.graph().arcs()) {
                auto & path = cl.witness(u, v).vertices;
                ++out.tallies["paths_checked"];
                for (std::size_t i = 0 ; i < path.size() ; ++i)
                    for (std::size_t j = i + 1 ; j < path.size() ; ++j)
                        if (d.adjacent(path[i], path[j]) != ((j - i) % 2 == 1)) {
                            out.failure = "adjacency parity fails on the witness path of (" + d.label(u) + "," + d.label(v) + ")";
                            return;
                        }
            }
        }

        auto check_lemma2(const ColoredDigraph & d, const string &, InstanceOutcome & out) -> void
        {
            if (! bipartite_partition(d) || ! k_cycles_properly_colored(d, { 4, 6 }).holds)
                return;
            out.passing = true;
            auto cl = closure(d);
            for (auto [u, v] : cl.graph().arcs()) {
                if (cl.has_arc(v, u))
                    continue;
                ++out.tallies["pairs_checked"];
                auto dist = distance(d, u, v);
                if (! dist || *dist > 2) {
                    out.failure = "one-way PC pair (" + d.label(u) + "," + d.label(v) + ") at distance greater than 2";
                    return;
                }
            }
        }

        auto check_obs1(const ColoredDigraph & d, const string &, InstanceOutcome & out) -> void
        {
            if (d.color_count() > 1)
                return;
            out.passing = true;
            auto plain = PlainDigraph::underlying(d);
            auto k = find_kernel(plain);
            auto exact = solve_pcp_exact(d);
            auto dispatched = solve_pcp(d);
            if (k)
                ++out.tallies["kernel_found"];
            if (k.has_value() != exact.has_value() || k.has_value() != dispatched.has_value())
                out.failure = "PCP-kernel existence differs from kernel existence";
            else if (k && k->members != exact->members)
                out.failure = "exact PCP-kernel differs from the kernel of the digraph";
            else if (dispatched && ! is_kernel(plain, dispatched->members))
                out.failure = "dispatched PCP-kernel is not a kernel of the digraph";
        }

        auto check_reduction(const ColoredDigraph & d, const string & note, InstanceOutcome & out) -> void
        {
            if (d.size() == 0)
                return;
            out.passing = true;
            Color max_m = 3;
            if (note.starts_with("max_m="))
                max_m = Color(std::stoul(note.substr(6)));
            auto plain = PlainDigraph::underlying(d);
            bool kernel = find_kernel(plain).has_value();
            if (kernel)
                ++out.tallies["kernel_found"];
            for (Color m = 1 ; m <= max_m ; ++m) {
                auto gadget = reduction_kernel_to_pathkernel(plain, m).d_prime;
                bool pc = solve_pcp_exact(gadget, PathMode::ProperlyColored).has_value();
                bool rainbow = solve_pcp_exact(gadget, PathMode::Rainbow).has_value();
                ++out.tallies["gadgets_checked"];
                if (pc != kernel || rainbow != kernel) {
                    out.failure = "m=" + std::to_string(m) + ": kernel " + (kernel ? "exists" : "missing") + ", PCP-kernel "
                        + (pc ? "exists" : "missing") + ", rainbow kernel " + (rainbow ? "exists" : "missing");
                    return;
                }
            }
        }

        const std::pair<const char *, Check> families[] = {
            { "conjecture", check_conjecture },
            { "thm4-exhaustive", check_thm4 },
            { "thm5-fuzz", check_thm5 },
            { "thm6-fuzz", check_thm6 },
            { "thm7i-fuzz", check_thm7i },
            { "thm7ii-fuzz", check_thm7ii },
            { "lemma1-fuzz", check_lemma1 },
            { "lemma2-fuzz", check_lemma2 },
            { "obs1-fuzz", check_obs1 },
            { "reduction-iff", check_reduction },
        };

        auto find_check(const string & family) -> const Check &
        {
            for (auto & [name, check] : families)
                if (family == name)
                    return check;
            throw Error(Errc::BadParameter, "unknown family '" + family + "'");
        }

        struct Instance
        {
            ColoredDigraph d;
            string note;
        };

        using Maker = std::function<auto (std::uint64_t seed) -> Instance>;

        auto merge(CheckReport & r, const string & family, std::uint64_t index, std::uint64_t seed,
                const Instance & instance, const InstanceOutcome & outcome) -> void
        {
            ++r.examined;
            if (outcome.passing)
                ++r.passing;
            if (outcome.budget_exceeded)
                ++r.budget_exceeded;
            for (auto & [key, count] : outcome.tallies)
                r.tallies[key] += count;
            if (outcome.failure)
                r.counterexamples.push_back(Counterexample{ index, seed, family, *outcome.failure, instance.note,
                        serialize_acd(instance.d), outcome.certificate });
        }

        /// Processes attempts in fixed-size batches and merges them in index order, so the
        /// report does not depend on `jobs`.
        auto run_attempts(CheckReport & r, const string & family, const Maker & make, std::uint64_t target,
                std::uint64_t max_attempts, unsigned jobs) -> void
        {
            constexpr std::uint64_t batch = 256;
            for (std::uint64_t start = 0 ; start < max_attempts && r.passing < target ; start += batch) {
                auto count = std::min(batch, max_attempts - start);
                vector<Instance> instances(count);
                vector<InstanceOutcome> outcomes(count);
                parallel_for(count, jobs, [&] (std::size_t i) {
                    instances[i] = make(derive_seed(r.seed, start + i));
                    outcomes[i] = check_property(family, instances[i].d, instances[i].note);
                });
                for (std::size_t i = 0 ; i < count && r.passing < target ; ++i)
                    merge(r, family, start + i, derive_seed(r.seed, start + i), instances[i], outcomes[i]);
            }
        }

        auto require_at_least(std::size_t value, std::size_t lo, const char * what) -> void
        {
            if (value < lo)
                throw Error(Errc::BadParameter, string(what) + " must be at least " + std::to_string(lo));
        }

        auto thm4_report(const SweepParams & p, CheckReport & r) -> void
        {
            if (p.n < 2 || p.n > 8 || p.m < 1 || p.m > 3)
                throw Error(Errc::BadParameter, "thm4-exhaustive needs 2 <= n <= 8 and 1 <= m <= 3");
            std::uint64_t total = 1;
            for (std::size_t i = 0 ; i < p.n ; ++i)
                total *= p.m;
            vector<Instance> instances(total);
            vector<InstanceOutcome> outcomes(total);
            parallel_for(total, p.jobs, [&] (std::size_t index) {
                vector<std::int64_t> colors(p.n);
                auto rest = index;
                for (std::size_t i = p.n ; i-- > 0 ; ) {
                    colors[i] = std::int64_t(rest % p.m) + 1;
                    rest /= p.m;
                }
                instances[index].d = colored_cycle(colors);
                outcomes[index] = check_property("thm4-exhaustive", instances[index].d);
            });
            for (std::size_t i = 0 ; i < total ; ++i)
                merge(r, "thm4-exhaustive", i, 0, instances[i], outcomes[i]);
        }

        auto to_json(const CheckReport & r) -> Json
        {
            Json j;
            j["family"] = r.family;
            Json params = Json::object();
            for (auto & [key, value] : r.params)
                params[key] = value;
            j["params"] = params;
            j["seed"] = r.seed;
            j["instances_examined"] = r.examined;
            j["instances_passing_precondition"] = r.passing;
            j["budget_exceeded"] = r.budget_exceeded;
            Json tallies = Json::object();
            for (auto & [key, value] : r.tallies)
                tallies[key] = value;
            j["tallies"] = tallies;
            Json list = Json::array();
            for (auto & c : r.counterexamples) {
                Json e;
                e["index"] = c.index;
                e["seed"] = c.seed;
                e["property"] = c.property;
                e["failure"] = c.failure;
                e["note"] = c.note;
                e["acd"] = c.acd;
                e["certificate"] = c.certificate ? Json(*c.certificate) : Json(nullptr);
                list.push_back(std::move(e));
            }
            j["counterexamples"] = list;
            return j;
        }
    }

    auto family_names() -> vector<string>
    {
        vector<string> names;
        for (auto & [name, check] : families)
            names.emplace_back(name);
        return names;
    }

    auto check_property(const string & family, const ColoredDigraph & d, const string & note) -> InstanceOutcome
    {
        auto & check = find_check(family);
        InstanceOutcome out;
        try {
            check(d, note, out);
        }
        catch (const Error & e) {
            if (e.code() != Errc::BudgetExceeded)
                throw;
            out = InstanceOutcome{};
            out.budget_exceeded = true;
        }
        return out;
    }

    auto recheck_counterexample(const Counterexample & c) -> bool
    {
        return check_property(c.property, parse_acd(c.acd), c.note).failure.has_value();
    }

    auto fuzz_conjecture(const FuzzParams & p, const vector<ColoredDigraph> & injected) -> CheckReport
    {
        if (p.n > 10)
            throw Error(Errc::BadParameter, "fuzz_conjecture is limited to n <= 10");
        auto started = std::chrono::steady_clock::now();

        CheckReport r;
        r.family = "conjecture";
        r.seed = p.seed;
        r.params = {
            { "generator", generator_kind_name(p.kind) },
            { "n", std::to_string(p.n) },
            { "nx", std::to_string(p.nx) },
            { "ny", std::to_string(p.ny) },
            { "m", std::to_string(p.m) },
            { "arc_probability", Json(p.arc_probability).dump() },
            { "samples", std::to_string(p.samples) },
            { "injected", std::to_string(injected.size()) },
            { "two_cycles_count_as_cycles", "true" },
        };

        for (std::size_t i = 0 ; i < injected.size() ; ++i)
            merge(r, "conjecture", i, 0, Instance{ injected[i], "injected" }, check_property("conjecture", injected[i]));
        auto offset = r.examined;

        GeneratorParams g{ p.n, p.nx, p.ny, p.m, p.arc_probability };
        CheckReport generated;
        generated.seed = p.seed;
        run_attempts(generated, "conjecture", [&] (std::uint64_t seed) {
            return Instance{ generate(p.kind, g, seed), "" };
        }, std::numeric_limits<std::uint64_t>::max(), p.samples, p.jobs);

        r.examined += generated.examined;
        r.passing += generated.passing;
        r.budget_exceeded += generated.budget_exceeded;
        for (auto & [key, count] : generated.tallies)
            r.tallies[key] += count;
        for (auto & c : generated.counterexamples) {
            c.index += offset;
            r.counterexamples.push_back(c);
        }
        r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        return r;
    }

    auto sweep_theorem(const string & family, const SweepParams & p) -> CheckReport
    {
        if (family == "conjecture")
            throw Error(Errc::BadParameter, "use fuzz_conjecture for the conjecture family");
        find_check(family);
        auto started = std::chrono::steady_clock::now();

        CheckReport r;
        r.family = family;
        r.seed = p.seed;
        r.params = {
            { "n", std::to_string(p.n) },
            { "nx", std::to_string(p.nx) },
            { "ny", std::to_string(p.ny) },
            { "m", std::to_string(p.m) },
            { "samples", std::to_string(p.samples) },
            { "arc_probability", Json(p.arc_probability).dump() },
        };

        if (family == "thm4-exhaustive") {
            thm4_report(p, r);
            r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
            return r;
        }

        if (p.m < 1)
            throw Error(Errc::BadParameter, "m must be at least 1");
        auto max_attempts = p.max_attempts ? p.max_attempts : 100 * p.samples + 1000;
        auto sized = [] (Rng & rng, std::size_t lo, std::size_t hi) { return std::size_t(uniform_in(rng, lo, hi)); };

        Maker make;
        if (family == "thm5-fuzz") {
            require_at_least(p.n, 2, "n");
            if (p.m < 2)
                throw Error(Errc::BadParameter, "thm5-fuzz needs m >= 2");
            make = [&] (std::uint64_t seed) {
                Rng rng(seed);
                auto n = sized(rng, 2, p.n);
                return Instance{ random_unicyclic(n, p.arc_probability, p.m, rng()), "" };
            };
        }
        else if (family == "thm6-fuzz") {
            require_at_least(p.n, 1, "n");
            make = [&] (std::uint64_t seed) {
                Rng rng(seed);
                auto n = sized(rng, 1, p.n);
                auto m = Color(uniform_in(rng, 1, p.m));
                return Instance{ random_semicomplete(n, m, rng()), "" };
            };
        }
        else if (family == "thm7ii-fuzz") {
            require_at_least(p.ny, 1, "ny");
            make = [&] (std::uint64_t seed) {
                Rng rng(seed);
                auto ny = sized(rng, 1, p.ny);
                auto m = Color(uniform_in(rng, 1, p.m));
                return Instance{ random_bipartite_tournament(2, ny, m, rng()), "" };
            };
        }
        else if (family == "thm7i-fuzz" || family == "lemma1-fuzz" || family == "lemma2-fuzz") {
            require_at_least(p.nx, 1, "nx");
            require_at_least(p.ny, 1, "ny");
            make = [&] (std::uint64_t seed) {
                Rng rng(seed);
                auto nx = sized(rng, 1, p.nx);
                auto ny = sized(rng, 1, p.ny);
                auto m = Color(uniform_in(rng, 1, p.m));
                return Instance{ random_bipartite_tournament(nx, ny, m, rng()), "" };
            };
        }
        else {
            require_at_least(p.n, 1, "n");
            auto note = family == "reduction-iff" ? "max_m=" + std::to_string(p.m) : string();
            make = [&, note] (std::uint64_t seed) {
                Rng rng(seed);
                auto n = sized(rng, 1, p.n);
                return Instance{ random_digraph(n, p.arc_probability, 1, rng()), note };
            };
        }

        run_attempts(r, family, make, p.samples, max_attempts, p.jobs);
        r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        return r;
    }

    auto report_to_json(const CheckReport & r) -> string
    {
        return to_json(r).dump(2) + "\n";
    }

    auto report_to_lines(const CheckReport & r) -> string
    {
        string out = "family " + r.family + "\n";
        for (auto & [key, value] : r.params)
            out += "param " + key + " " + value + "\n";
        out += "seed " + std::to_string(r.seed) + "\n";
        out += "examined " + std::to_string(r.examined) + "\n";
        out += "passing " + std::to_string(r.passing) + "\n";
        out += "budget-exceeded " + std::to_string(r.budget_exceeded) + "\n";
        for (auto & [key, value] : r.tallies)
            out += "tally " + key + " " + std::to_string(value) + "\n";
        out += "counterexamples " + std::to_string(r.counterexamples.size()) + "\n";
        auto embed = [&] (const string & text) {
            std::size_t start = 0;
            while (start < text.size()) {
                auto end = text.find('\n', start);
                if (end == string::npos)
                    end = text.size();
                out += "| " + text.substr(start, end - start) + "\n";
                start = end + 1;
            }
        };
        for (auto & c : r.counterexamples) {
            out += "counterexample " + std::to_string(c.index) + " seed " + std::to_string(c.seed) + " property " + c.property + "\n";
            out += "failure " + c.failure + "\n";
            if (! c.note.empty())
                out += "note " + c.note + "\n";
            embed(c.acd);
            if (c.certificate) {
                out += "certificate\n";
                embed(*c.certificate);
            }
        }
        return out;
    }

    auto report_from_json(const string & text) -> CheckReport
    {
        try {
            auto j = Json::parse(text);
            CheckReport r;
            r.family = j.at("family").get<string>();
            for (auto & [key, value] : j.at("params").items())
                r.params.emplace_back(key, value.get<string>());
            r.seed = j.at("seed").get<std::uint64_t>();
            r.examined = j.at("instances_examined").get<std::uint64_t>();
            r.passing = j.at("instances_passing_precondition").get<std::uint64_t>();
            r.budget_exceeded = j.at("budget_exceeded").get<std::uint64_t>();
            for (auto & [key, value] : j.at("tallies").items())
                r.tallies[key] = value.get<std::uint64_t>();
            for (auto & e : j.at("counterexamples")) {
                Counterexample c;
                c.index = e.at("index").get<std::uint64_t>();
                c.seed = e.at("seed").get<std::uint64_t>();
                c.property = e.at("property").get<string>();
                c.failure = e.at("failure").get<string>();
                c.note = e.at("note").get<string>();
                c.acd = e.at("acd").get<string>();
                if (! e.at("certificate").is_null())
                    c.certificate = e.at("certificate").get<string>();
                r.counterexamples.push_back(std::move(c));
            }
            return r;
        }
        catch (const nlohmann::json::exception & e) {
            throw Error(Errc::SyntaxError, string("report: ") + e.what());
        }
    }
}
