#include <pcpk/constructors.hh>
#include <pcpk/closure.hh>
#include <pcpk/conditions.hh>
#include <pcpk/contraction.hh>
#include <pcpk/error.hh>
#include <pcpk/graph_algorithms.hh>
#include <pcpk/kernel.hh>

#include <algorithm>
#include <set>

using std::nullopt;
using std::optional;
using std::string;
using std::vector;

namespace pcpk
{
    namespace
    {
        auto finish(const ColoredDigraph & d, vector<Vertex> members, const string & method, vector<string> trail,
                const SolveOptions & options) -> optional<PcpKernelCertificate>
        {
            std::sort(members.begin(), members.end());
            if (auto c = verify_pcp_kernel(d, members, PathMode::ProperlyColored, options)) {
                c->method = method;
                c->trail = std::move(trail);
                return c;
            }
            trail.push_back(method + " produced a set that failed verification; exact solver used");
            auto c = solve_pcp_exact(d, PathMode::ProperlyColored, options);
            if (c) {
                c->trail = std::move(trail);
                c->fallback_used = true;
            }
            return c;
        }

        auto has_path_to(const ColoredDigraph & d, Vertex v, const vector<Vertex> & targets, const SolveOptions & options) -> bool
        {
            if (targets.empty())
                return false;
            return PathSearcher(d, PathMode::ProperlyColored, targets).find_from(v, SearchOptions{ nullopt, options.budget }).has_value();
        }

        auto labels_of(const ColoredDigraph & d, const vector<Vertex> & vs) -> string
        {
            string out = "{";
            for (std::size_t i = 0 ; i < vs.size() ; ++i)
                out += (i ? "," : "") + d.label(vs[i]);
            return out + "}";
        }
    }

    auto pcp_kernel_of_cycle(const ColoredDigraph & c, const SolveOptions & options) -> optional<PcpKernelCertificate>
    {
        auto order = cycle_order(c);
        auto n = order.size();
        vector<Color> col(n);
        for (std::size_t i = 0 ; i < n ; ++i)
            col[i] = c.color(order[i], order[(i + 1) % n]);

        bool monochromatic = std::all_of(col.begin(), col.end(), [&] (Color x) { return x == col[0]; });
        bool proper = true;
        for (std::size_t i = 0 ; i < n ; ++i)
            proper = proper && col[i] != col[(i + 1) % n];

        vector<Vertex> members;
        string method;
        if (monochromatic) {
            if (n % 2 == 1)
                return nullopt;
            for (std::size_t i = 0 ; i < n ; i += 2)
                members.push_back(order[i]);
            method = "cycle-monochromatic-even";
        }
        else if (proper) {
            members.push_back(order[0]);
            method = "cycle-properly-colored";
        }
        else {
            std::size_t start = 0;
            while (col[(start + n - 1) % n] == col[start])
                ++start;
            auto at = [&] (std::size_t j) { return (start + j) % n; };
            for (std::size_t a = 0 ; a < n ; ) {
                auto b = a;
                while (b + 1 < n && col[at(b + 1)] == col[at(a)])
                    ++b;
                auto end = b + 1;
                if (end - a >= 2)
                    for (auto t = std::ptrdiff_t(end) - 2 ; t >= std::ptrdiff_t(a) ; t -= 2)
                        members.push_back(order[at(std::size_t(t))]);
                a = b + 1;
            }
            method = "cycle-runs";
        }
        return finish(c, std::move(members), method, {}, options);
    }

    auto pcp_kernel_of_unicyclic(const ColoredDigraph & d, const SolveOptions & options) -> PcpKernelCertificate
    {
        auto cycle = unique_cycle(d);
        if (! cycle)
            throw Error(Errc::NotUnicyclic, "the digraph does not have exactly one cycle");
        if (! cycle_is_properly_colored(d, *cycle))
            throw Error(Errc::CycleNotProperlyColored, "the unique cycle is not properly colored");

        auto comps = strong_components(adjacency_of(d));
        auto k = comps.members.size();
        auto cyclic = comps.component[cycle->front()];

        vector<Vertex> s;
        vector<char> member(d.size(), 0);
        vector<string> trail;
        auto add = [&] (Vertex v) {
            s.push_back(v);
            member[v] = 1;
        };

        if (cyclic + 1 == k) {
            add(cycle->front());
            trail.push_back("seed with cycle vertex " + d.label(cycle->front()));
        }
        else {
            for (Vertex v = 0 ; v < d.size() ; ++v)
                if (d.out_degree(v) == 0)
                    add(v);
            trail.push_back("seed with sinks " + labels_of(d, s));
        }

        for (auto j = k ; j-- > 0 ; ) {
            if (j == cyclic) {
                for (auto v : comps.members[j])
                    if (! member[v] && ! has_path_to(d, v, s, options)) {
                        add(v);
                        trail.push_back("add cycle vertex " + d.label(v));
                        break;
                    }
                continue;
            }
            auto v = comps.members[j].front();
            if (! member[v] && ! has_path_to(d, v, s, options)) {
                add(v);
                trail.push_back("add " + d.label(v));
            }
        }
        return *finish(d, std::move(s), "unicyclic", std::move(trail), options);
    }

    auto good_vertex_semicomplete(const ColoredDigraph & d, const SolveOptions & options) -> optional<Vertex>
    {
        if (! is_semi_complete(d))
            throw Error(Errc::NotSemiComplete, "the digraph is not semi-complete");
        SearchOptions bounded{ 3, options.budget };
        for (Vertex v = 0 ; v < d.size() ; ++v) {
            Vertex target[] = { v };
            PathSearcher searcher(d, PathMode::ProperlyColored, target);
            bool good = true;
            for (Vertex u = 0 ; u < d.size() && good ; ++u)
                good = u == v || searcher.find_from(u, bounded).has_value();
            if (good)
                return v;
        }
        return nullopt;
    }

    auto pcp_kernel_semicomplete(const ColoredDigraph & d, const SolveOptions & options) -> optional<PcpKernelCertificate>
    {
        auto good = good_vertex_semicomplete(d, options);
        if (d.size() == 0)
            return verify_pcp_kernel(d, {}, PathMode::ProperlyColored, options);
        if (good) {
            Vertex s[] = { *good };
            if (auto c = verify_pcp_kernel(d, s, PathMode::ProperlyColored, options)) {
                c->method = "semicomplete-good-vertex";
                return c;
            }
        }
        for (Vertex v = 0 ; v < d.size() ; ++v) {
            Vertex s[] = { v };
            if (auto c = verify_pcp_kernel(d, s, PathMode::ProperlyColored, options)) {
                c->method = "semicomplete-singleton";
                c->trail.push_back("no good vertex; singleton scan");
                return c;
            }
        }
        return nullopt;
    }

    namespace
    {
        class BipartiteSolver
        {
            private:
                const ColoredDigraph & _input;
                const SolveOptions & _options;
                BipartiteTrace & _trace;

                /// Colors are renumbered in induced sub-digraphs; the trace reports input colors.
                auto input_color(const vector<Vertex> & original, Vertex u, Vertex v) const -> Color
                {
                    return _input.color(original[u], original[v]);
                }

            public:
                string method = "bipartite-case-analysis";

                BipartiteSolver(const ColoredDigraph & input, const SolveOptions & options, BipartiteTrace & trace) :
                    _input(input),
                    _options(options),
                    _trace(trace)
                {
                }

                auto step(const string & text) -> void
                {
                    _trace.steps.push_back(text);
                }

                auto record(const string & name, const vector<Vertex> & vs, const vector<Vertex> & original) -> void
                {
                    vector<Vertex> mapped;
                    for (auto v : vs)
                        mapped.push_back(original[v]);
                    std::sort(mapped.begin(), mapped.end());
                    _trace.sets[name] = std::move(mapped);
                }

                auto outcome(const string & text, vector<Vertex> members) -> vector<Vertex>
                {
                    _trace.outcome = text;
                    step("outcome " + text);
                    return members;
                }

                auto without(const ColoredDigraph & g, const vector<Vertex> & x, const vector<Vertex> & y,
                        const vector<Vertex> & original, Vertex drop) -> optional<vector<Vertex>>
                {
                    vector<Vertex> keep, x2, y2, original2;
                    vector<Vertex> index(g.size());
                    for (Vertex v = 0 ; v < g.size() ; ++v)
                        if (v != drop) {
                            index[v] = keep.size();
                            keep.push_back(v);
                            original2.push_back(original[v]);
                        }
                    for (auto v : x)
                        if (v != drop)
                            x2.push_back(index[v]);
                    for (auto v : y)
                        if (v != drop)
                            y2.push_back(index[v]);
                    auto sub = solve(g.induced(keep), x2, y2, original2);
                    if (! sub)
                        return nullopt;
                    vector<Vertex> members;
                    for (auto v : *sub)
                        members.push_back(keep[v]);
                    return members;
                }

                auto solve(const ColoredDigraph & g, vector<Vertex> x, vector<Vertex> y, const vector<Vertex> & original)
                    -> optional<vector<Vertex>>
                {
                    if (g.color_count() <= 1) {
                        method = "bipartite-one-color";
                        bool x_absorbs = std::all_of(y.begin(), y.end(), [&] (Vertex v) {
                            return std::any_of(x.begin(), x.end(), [&] (Vertex u) { return g.has_arc(v, u); });
                        });
                        return outcome(x_absorbs ? "one color: X" : "one color: Y", x_absorbs ? x : y);
                    }
                    if (std::min(x.size(), y.size()) <= 1) {
                        method = "bipartite-acyclic";
                        step("a side has at most one vertex; acyclic");
                        return outcome("acyclic kernel", kernel_of_acyclic(closure(g).graph()).members);
                    }
                    if (std::min(x.size(), y.size()) >= 3) {
                        if (! k_cycles_properly_colored(g, { 4, 6 }).holds)
                            throw Error(Errc::NoApplicableCondition,
                                    "both sides have at least 3 vertices and some 4- or 6-cycle is not properly colored");
                        method = "bipartite-exact";
                        step("every 4- and 6-cycle is properly colored; exact solver");
                        auto c = solve_pcp_exact(g, PathMode::ProperlyColored, _options);
                        if (! c)
                            return nullopt;
                        return outcome("exact", c->members);
                    }

                    if (x.size() != 2) {
                        std::swap(x, y);
                        step("swap sides so that X has two vertices");
                    }

                    for (auto v : y)
                        if (g.in_degree(v) == 0) {
                            step("strip source " + g.label(v));
                            auto members = without(g, x, y, original, v);
                            if (! members)
                                return nullopt;
                            if (! has_path_to(g, v, *members, _options)) {
                                members->push_back(v);
                                step("restore source " + g.label(v) + " as a member");
                            }
                            std::sort(members->begin(), members->end());
                            return members;
                        }

                    for (Vertex a = 0 ; a < g.size() ; ++a)
                        for (Vertex b = a + 1 ; b < g.size() ; ++b)
                            if (contractible(g, a, b)) {
                                step("contract " + g.label(b) + " into " + g.label(a));
                                auto members = without(g, x, y, original, b);
                                if (! members)
                                    return nullopt;
                                bool has_a = std::find(members->begin(), members->end(), a) != members->end();
                                if (has_a && ! pc_path_exists(g, b, a, PathMode::ProperlyColored, SearchOptions{ nullopt, _options.budget })) {
                                    members->push_back(b);
                                    step("restore " + g.label(b) + " beside " + g.label(a));
                                }
                                std::sort(members->begin(), members->end());
                                return members;
                            }

                    return case_analysis(g, x[0], x[1], y, original);
                }

                auto case_analysis(const ColoredDigraph & g, Vertex x1, Vertex x2, const vector<Vertex> & y,
                        const vector<Vertex> & original) -> vector<Vertex>
                {
                    auto col = [&] (Vertex u, Vertex v) { return g.color(u, v); };
                    auto pc = [&] (Vertex u, Vertex v) {
                        return pc_path_exists(g, u, v, PathMode::ProperlyColored, SearchOptions{ nullopt, _options.budget }).has_value();
                    };
                    auto join = [] (vector<Vertex> a, const vector<Vertex> & b) {
                        a.insert(a.end(), b.begin(), b.end());
                        std::sort(a.begin(), a.end());
                        return a;
                    };

                    vector<Vertex> y0;
                    for (auto v : y)
                        if (g.has_arc(x1, v) && g.has_arc(x2, v))
                            y0.push_back(v);
                    record("Y0", y0, original);

                    if (! y0.empty()) {
                        step("case Y0 nonempty");
                        vector<Vertex> y1, y2;
                        for (auto v : y)
                            if (std::find(y0.begin(), y0.end(), v) == y0.end())
                                (has_path_to(g, v, y0, _options) ? y1 : y2).push_back(v);
                        record("Y1", y1, original);
                        record("Y2", y2, original);
                        if (y2.empty())
                            return outcome("Y2 empty: Y0", y0);

                        vector<Vertex> s1;
                        for (auto v : y2)
                            if (std::none_of(s1.begin(), s1.end(), [&] (Vertex s) { return pc(v, s) || pc(s, v); }))
                                s1.push_back(v);
                        record("S'", s1, original);
                        if (s1.size() == y2.size())
                            return outcome("S' = Y2: Y0 + S'", join(y0, s1));

                        vector<Vertex> r;
                        for (auto v : y2)
                            if (std::find(s1.begin(), s1.end(), v) == s1.end() && ! has_path_to(g, v, s1, _options))
                                r.push_back(v);
                        record("R", r, original);
                        if (r.empty())
                            return outcome("R empty: Y0 + S'", join(y0, s1));

                        auto rr = r.front();
                        record("r", { rr }, original);
                        Vertex xs[] = { x1, x2 };
                        for (auto s : s1)
                            for (int a = 0 ; a < 2 ; ++a) {
                                auto xa = xs[a], xb = xs[1 - a];
                                if (! g.has_arc(s, xa) || ! g.has_arc(xb, rr))
                                    continue;
                                for (auto v : y)
                                    if (v != s && v != rr && g.has_arc(xa, v) && g.has_arc(v, xb)
                                            && col(s, xa) != col(xa, v) && col(xa, v) != col(v, xb) && col(v, xb) != col(xb, rr))
                                        return outcome("PC path of length 4 into r: Y0 + r", join(y0, { rr }));
                            }

                        optional<Vertex> through;
                        for (auto s : s1) {
                            for (auto xa : xs)
                                if (g.has_arc(s, xa) && g.has_arc(xa, rr) && col(s, xa) != col(xa, rr)) {
                                    through = xa;
                                    break;
                                }
                            if (through)
                                break;
                        }
                        if (! through)
                            return outcome("no PC path of length 2 into r: Y0 + r", join(y0, { rr }));
                        step("PC path of length 2 into r through " + g.label(*through));

                        vector<Vertex> q;
                        for (auto v : y2)
                            if (v != rr && g.has_arc(*through, v))
                                q.push_back(v);
                        record("Q", q, original);
                        if (q.empty())
                            return outcome("Q empty: Y0 + r", join(y0, { rr }));
                        for (auto v : q)
                            if (pc(rr, v))
                                return outcome("PC path from r into Q: Y0 + q", join(y0, { v }));

                        vector<Vertex> q1;
                        for (auto v : q)
                            if (! pc(v, rr))
                                q1.push_back(v);
                        record("Q'", q1, original);
                        return outcome("Y0 + Q' + r", join(join(y0, q1), { rr }));
                    }

                    step("case Y0 empty");
                    vector<Vertex> y1, y2, ys1, ys2;
                    auto split = [&] {
                        y1.clear(), y2.clear(), ys1.clear(), ys2.clear();
                        for (auto v : y) {
                            if (g.has_arc(x1, v) && g.has_arc(v, x2)) {
                                y1.push_back(v);
                                if (col(x1, v) != col(v, x2))
                                    ys1.push_back(v);
                            }
                            else if (g.has_arc(x2, v) && g.has_arc(v, x1)) {
                                y2.push_back(v);
                                if (col(x2, v) != col(v, x1))
                                    ys2.push_back(v);
                            }
                        }
                    };
                    split();
                    if (ys1.empty() && ys2.empty()) {
                        record("Y'", y1, original);
                        record("Y''", y2, original);
                        return outcome("no PC path between x1 and x2: {x1,x2}", join({ x1 }, { x2 }));
                    }
                    if (ys1.empty()) {
                        std::swap(x1, x2);
                        split();
                        step("swap x1 and x2 so that Y* is nonempty");
                    }
                    record("Y'", y1, original);
                    record("Y''", y2, original);
                    record("Y*", ys1, original);
                    record("Y**", ys2, original);

                    auto first_colors = [&] (const vector<Vertex> & vs, Vertex from) {
                        std::set<Color> cs;
                        for (auto v : vs)
                            cs.insert(col(from, v));
                        return cs;
                    };
                    if (first_colors(ys1, x1).size() > 1)
                        return outcome("two colors from x1 into Y*: {x2}", { x2 });
                    auto alpha = col(x1, ys1.front());
                    _trace.alpha = input_color(original, x1, ys1.front());

                    auto pick = [&] (const vector<Vertex> & vs, Vertex in_from, Vertex out_to, auto predicate) {
                        vector<Vertex> out;
                        for (auto v : vs)
                            if (predicate(col(in_from, v), col(v, out_to)))
                                out.push_back(v);
                        return out;
                    };
                    auto y1_alpha = pick(y1, x1, x2, [&] (Color a, Color b) { return a == alpha && b == alpha; });
                    auto y2_alpha = pick(y2, x2, x1, [&] (Color a, Color b) { return a == alpha && b == alpha; });
                    record("Y'_alpha", y1_alpha, original);
                    record("Y''_alpha", y2_alpha, original);

                    if (ys2.empty()) {
                        if (y2_alpha.empty())
                            return outcome("Y** empty, Y''_alpha empty: {x2}", { x2 });
                        if (y1_alpha.empty())
                            return outcome("Y** empty, Y'_alpha empty: Y''_alpha", y2_alpha);
                        return outcome("Y** empty: Y'_alpha + Y''_alpha", join(y1_alpha, y2_alpha));
                    }
                    if (first_colors(ys2, x2).size() > 1)
                        return outcome("two colors from x2 into Y**: {x1}", { x1 });
                    auto beta = col(x2, ys2.front());
                    _trace.beta = input_color(original, x2, ys2.front());

                    auto other = [&] (Color c) { return c != alpha && c != beta; };
                    auto y1_beta = pick(y1, x1, x2, [&] (Color a, Color b) { return a == beta && b == beta; });
                    auto y2_beta = pick(y2, x2, x1, [&] (Color a, Color b) { return a == beta && b == beta; });
                    auto y1_gamma = pick(y1, x1, x2, [&] (Color a, Color b) { return a == b && other(a); });
                    auto y2_gamma = pick(y2, x2, x1, [&] (Color a, Color b) { return a == b && other(a); });
                    auto y1_alpha_beta = pick(y1, x1, x2, [&] (Color a, Color b) { return alpha != beta && a == alpha && b == beta; });
                    auto y1_alpha_gamma = pick(y1, x1, x2, [&] (Color a, Color b) { return a == alpha && other(b); });
                    auto y2_beta_alpha = pick(y2, x2, x1, [&] (Color a, Color b) { return alpha != beta && a == beta && b == alpha; });
                    auto y2_beta_gamma = pick(y2, x2, x1, [&] (Color a, Color b) { return a == beta && other(b); });
                    record("Y'_beta", y1_beta, original);
                    record("Y''_beta", y2_beta, original);
                    record("Y'_gamma", y1_gamma, original);
                    record("Y''_gamma", y2_gamma, original);
                    record("Y'_alpha_beta", y1_alpha_beta, original);
                    record("Y'_alpha_gamma", y1_alpha_gamma, original);
                    record("Y''_beta_alpha", y2_beta_alpha, original);
                    record("Y''_beta_gamma", y2_beta_gamma, original);

                    if (alpha == beta) {
                        step("alpha = beta");
                        if (y2_alpha.empty())
                            return outcome("alpha = beta, Y''_alpha empty: {x2}", { x2 });
                        return outcome("alpha = beta: Y'_alpha + Y''_alpha", join(y1_alpha, y2_alpha));
                    }

                    step("alpha != beta");
                    if (y2_alpha.empty() && y2_beta_alpha.empty())
                        return outcome("Y''_alpha and Y''_beta_alpha empty: {x2}", { x2 });
                    if (! y2_alpha.empty() && ! y2_beta_alpha.empty())
                        return outcome("Y''_alpha + Y''_beta_alpha", join(y2_alpha, y2_beta_alpha));
                    if (! y2_alpha.empty()) {
                        if (y1_alpha.empty())
                            return outcome("Y''_beta_alpha empty, Y'_alpha empty: Y''_alpha", y2_alpha);
                        return outcome("Y''_beta_alpha empty: Y'_alpha + Y''_alpha", join(y1_alpha, y2_alpha));
                    }
                    if (y1_beta.empty() && y1_alpha_beta.empty())
                        return outcome("Y'_beta and Y'_alpha_beta empty: Y''_beta_alpha", y2_beta_alpha);
                    if (y1_beta.empty())
                        return outcome("Y'_beta empty: Y'_alpha_beta + Y''_beta_alpha", join(y1_alpha_beta, y2_beta_alpha));
                    if (! y1_alpha_beta.empty())
                        return outcome("Y'_beta + Y'_alpha_beta", join(y1_beta, y1_alpha_beta));
                    if (y2_beta.empty())
                        return outcome("Y'_alpha_beta empty, Y''_beta empty: Y'_beta", y1_beta);
                    return outcome("Y'_alpha_beta empty: Y'_beta + Y''_beta", join(y1_beta, y2_beta));
                }
        };
    }

    auto pcp_kernel_bipartite(const ColoredDigraph & d, const BipartitePartition & partition,
            const SolveOptions & options, BipartiteTrace * trace) -> optional<PcpKernelCertificate>
    {
        if (! is_bipartite_tournament(d, partition))
            throw Error(Errc::NotBipartiteTournament, "the partition does not make the digraph a bipartite tournament");

        BipartiteTrace local;
        auto & t = trace ? *trace : local;
        t = {};
        BipartiteSolver solver(d, options, t);
        vector<Vertex> original(d.size());
        for (Vertex v = 0 ; v < d.size() ; ++v)
            original[v] = v;

        auto members = solver.solve(d, partition.x, partition.y, original);
        if (! members)
            return nullopt;
        return finish(d, std::move(*members), solver.method, t.steps, options);
    }
}
