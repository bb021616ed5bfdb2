#include <pcpk/solve.hh>
#include <pcpk/classify.hh>
#include <pcpk/closure.hh>
#include <pcpk/conditions.hh>
#include <pcpk/constructors.hh>
#include <pcpk/error.hh>
#include <pcpk/graph_algorithms.hh>
#include <pcpk/kernel.hh>

#include <utility>

using std::nullopt;
using std::optional;
using std::string;
using std::vector;

namespace pcpk
{
    namespace
    {
        const std::pair<const char *, ForcedClass> class_names[] = {
            { "exact", ForcedClass::Exact },
            { "acyclic", ForcedClass::Acyclic },
            { "properly-connected", ForcedClass::ProperlyConnected },
            { "proper-coloring", ForcedClass::ProperColoring },
            { "cycle", ForcedClass::Cycle },
            { "unicyclic", ForcedClass::Unicyclic },
            { "semicomplete", ForcedClass::SemiComplete },
            { "bipartite", ForcedClass::Bipartite },
        };

        auto tagged(optional<PcpKernelCertificate> c, const string & method, vector<string> trail = {})
            -> optional<PcpKernelCertificate>
        {
            if (c) {
                c->method = method;
                c->trail.insert(c->trail.begin(), trail.begin(), trail.end());
            }
            return c;
        }

        auto acyclic_kernel(const ColoredDigraph & d, PathMode mode, const SolveOptions & options)
            -> optional<PcpKernelCertificate>
        {
            if (! is_acyclic(adjacency_of(d)))
                throw Error(Errc::NotAcyclic, "the digraph has a cycle");
            auto k = kernel_of_acyclic(closure(d, mode, ClosureOptions{ options.budget, options.jobs }).graph());
            return tagged(verify_pcp_kernel(d, k.members, mode, options), "acyclic");
        }

        auto properly_connected_kernel(const ColoredDigraph & d, const SolveOptions & options)
            -> optional<PcpKernelCertificate>
        {
            if (! is_properly_connected(d))
                throw Error(Errc::NoApplicableCondition, "the digraph is not properly connected");
            vector<Vertex> s;
            if (d.size() > 0)
                s.push_back(0);
            return tagged(verify_pcp_kernel(d, s, PathMode::ProperlyColored, options), "properly-connected");
        }

        /// With a proper arc coloring every path is PC, so one vertex from each terminal strong
        /// component is a kernel.
        auto proper_coloring_kernel(const ColoredDigraph & d, const SolveOptions & options)
            -> optional<PcpKernelCertificate>
        {
            if (! is_properly_arc_colored(d))
                throw Error(Errc::NoApplicableCondition, "the arc coloring is not proper");
            auto adj = adjacency_of(d);
            auto comps = strong_components(adj);
            vector<char> terminal(comps.members.size(), 1);
            for (Vertex v = 0 ; v < d.size() ; ++v)
                for (auto w : adj[v])
                    if (comps.component[w] != comps.component[v])
                        terminal[comps.component[v]] = 0;

            vector<Vertex> s;
            vector<string> trail;
            for (std::size_t c = 0 ; c < comps.members.size() ; ++c) {
                if (! terminal[c])
                    continue;
                s.push_back(comps.members[c].front());
                if (comps.members[c].size() > 1 && comps.members.size() > 1)
                    trail.push_back("anomaly: terminal strong component of " + d.label(comps.members[c].front())
                            + " has no sink; the set of sinks is not a kernel, one vertex per terminal component used");
            }
            return tagged(verify_pcp_kernel(d, s, PathMode::ProperlyColored, options), "proper-coloring", trail);
        }

        auto run_forced(const ColoredDigraph & d, PathMode mode, const DispatchOptions & options)
            -> optional<PcpKernelCertificate>
        {
            auto & solve = options.solve;
            if (mode == PathMode::Rainbow && options.forced != ForcedClass::Exact && options.forced != ForcedClass::Acyclic)
                throw Error(Errc::NoApplicableCondition, "only the exact and acyclic solvers support rainbow paths");
            switch (options.forced) {
                case ForcedClass::None:
                case ForcedClass::Exact:
                    return solve_pcp_exact(d, mode, solve);
                case ForcedClass::Acyclic:
                    return acyclic_kernel(d, mode, solve);
                case ForcedClass::ProperlyConnected:
                    return properly_connected_kernel(d, solve);
                case ForcedClass::ProperColoring:
                    return proper_coloring_kernel(d, solve);
                case ForcedClass::Cycle:
                    return pcp_kernel_of_cycle(d, solve);
                case ForcedClass::Unicyclic:
                    return pcp_kernel_of_unicyclic(d, solve);
                case ForcedClass::SemiComplete:
                    return pcp_kernel_semicomplete(d, solve);
                case ForcedClass::Bipartite: {
                    auto p = bipartite_partition(d);
                    if (! p)
                        throw Error(Errc::NotBipartiteTournament, "the digraph is not a bipartite tournament");
                    return pcp_kernel_bipartite(d, *p, solve);
                }
            }
            return nullopt;
        }

        auto exact_after(const ColoredDigraph & d, PathMode mode, const SolveOptions & options,
                vector<string> trail, bool fallback) -> optional<PcpKernelCertificate>
        {
            auto c = solve_pcp_exact(d, mode, options);
            if (c) {
                c->trail.insert(c->trail.begin(), trail.begin(), trail.end());
                c->fallback_used = fallback;
            }
            return c;
        }
    }

    auto parse_forced_class(const string & text) -> ForcedClass
    {
        for (auto & [name, value] : class_names)
            if (text == name)
                return value;
        throw Error(Errc::BadParameter, "unknown class '" + text + "'");
    }

    auto forced_class_names() -> vector<string>
    {
        vector<string> names;
        for (auto & [name, value] : class_names)
            names.emplace_back(name);
        return names;
    }

    auto solve_pcp(const ColoredDigraph & d, PathMode mode, const DispatchOptions & options)
        -> optional<PcpKernelCertificate>
    {
        if (options.forced != ForcedClass::None)
            return run_forced(d, mode, options);

        auto & solve = options.solve;
        if (is_acyclic(adjacency_of(d)))
            if (auto c = acyclic_kernel(d, mode, solve))
                return c;
        if (mode == PathMode::Rainbow)
            return exact_after(d, mode, solve, {}, false);

        vector<string> trail;
        auto attempt = [&] (const string & name, auto && construct) -> optional<PcpKernelCertificate> {
            auto c = construct();
            if (! c) {
                trail.push_back(name + " found no kernel; confirming with the exact solver");
                return exact_after(d, mode, solve, trail, false);
            }
            c->trail.insert(c->trail.begin(), trail.begin(), trail.end());
            return c;
        };

        if (is_properly_connected(d))
            return attempt("properly-connected", [&] { return properly_connected_kernel(d, solve); });
        if (is_properly_arc_colored(d))
            return attempt("proper-coloring", [&] { return proper_coloring_kernel(d, solve); });
        if (is_cycle(d))
            return attempt("cycle", [&] { return pcp_kernel_of_cycle(d, solve); });
        if (auto cycle = unique_cycle(d) ; cycle && cycle_is_properly_colored(d, *cycle))
            return attempt("unicyclic", [&] { return optional(pcp_kernel_of_unicyclic(d, solve)); });
        if (is_semi_complete(d) && ! has_monochromatic_triangle(d).holds)
            return attempt("semicomplete", [&] { return pcp_kernel_semicomplete(d, solve); });
        if (auto p = bipartite_partition(d)) {
            try {
                return attempt("bipartite", [&] { return pcp_kernel_bipartite(d, *p, solve); });
            }
            catch (const Error & e) {
                if (e.code() != Errc::NoApplicableCondition && e.code() != Errc::BudgetExceeded)
                    throw;
                trail.push_back(string("bipartite: ") + e.what());
            }
        }
        return exact_after(d, mode, solve, trail, false);
    }
}
